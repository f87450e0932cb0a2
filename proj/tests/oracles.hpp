#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

// Brute-force reference implementations and deterministic random instance
// generators shared by the unit tests and the acceptance suite.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "unimod/graph.hpp"
#include "unimod/rational.hpp"

namespace testor {

using unimod::Graph;
using unimod::Rational;
using unimod::Vertex;

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random simple graph respecting the degree cap; not necessarily connected.
inline Graph random_graph(Rng& rng, int max_n, int delta = unimod::kDefaultDelta) {
    int n = rand_int(rng, 1, max_n);
    std::vector<int> deg(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edges;
    int want = rand_int(rng, 0, n * 2);
    for (int t = 0; t < want; ++t) {
        int u = rand_int(rng, 0, n - 1), v = rand_int(rng, 0, n - 1);
        if (u == v || deg[u] >= delta || deg[v] >= delta) continue;
        auto e = std::minmax(u, v);
        if (std::find(edges.begin(), edges.end(), std::make_pair(e.first, e.second)) !=
            edges.end())
            continue;
        edges.emplace_back(e.first, e.second);
        ++deg[u];
        ++deg[v];
    }
    return Graph(n, std::move(edges), delta);
}

// Random connected graph: random spanning tree plus extra edges, within the cap.
inline Graph random_connected_graph(Rng& rng, int max_n, int delta = unimod::kDefaultDelta) {
    int n = rand_int(rng, 1, max_n);
    std::vector<int> deg(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 1; v < n; ++v) {
        int p;
        do {
            p = rand_int(rng, 0, v - 1);
        } while (deg[p] >= delta);
        edges.emplace_back(p, v);
        ++deg[p];
        ++deg[v];
    }
    int extra = rand_int(rng, 0, n);
    for (int t = 0; t < extra; ++t) {
        int u = rand_int(rng, 0, n - 1), v = rand_int(rng, 0, n - 1);
        if (u == v || deg[u] >= delta || deg[v] >= delta) continue;
        auto e = std::minmax(u, v);
        if (std::find(edges.begin(), edges.end(), std::make_pair(e.first, e.second)) !=
            edges.end())
            continue;
        edges.emplace_back(e.first, e.second);
        ++deg[u];
        ++deg[v];
    }
    return Graph(n, std::move(edges), delta);
}

namespace detail {

// Enumerates every isomorphism A -> B extending `map` (vertices 0..k-1 of A
// already mapped); calls `found` with each complete map; `found` returning true
// stops the search.
inline bool search_isos(const Graph& A, const Graph& B, std::vector<int>& map,
                        std::vector<char>& used, int k,
                        const std::function<bool(const std::vector<int>&)>& found) {
    int n = A.vertex_count();
    if (k == n) return found(map);
    for (int img = 0; img < n; ++img) {
        if (used[img] || A.degree(k) != B.degree(img)) continue;
        bool ok = true;
        for (int prev = 0; prev < k && ok; ++prev)
            if (A.adjacent(prev, k) != B.adjacent(map[prev], img)) ok = false;
        if (!ok) continue;
        map[k] = img;
        used[img] = 1;
        if (search_isos(A, B, map, used, k + 1, found)) return true;
        used[img] = 0;
    }
    return false;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Exhaustive-search automorphism orbits (backtracking over all automorphisms).
inline std::vector<std::vector<Vertex>> brute_orbits(const Graph& X) {
    int n = X.vertex_count();
    detail::UnionFind uf(n);
    std::vector<int> map(n);
    std::vector<char> used(n, 0);
    detail::search_isos(X, X, map, used, 0, [&](const std::vector<int>& m) {
        for (int v = 0; v < n; ++v) uf.unite(v, m[v]);
        return false;  // keep enumerating
    });
    std::vector<std::vector<Vertex>> cells(n);
    for (int v = 0; v < n; ++v) cells[uf.find(v)].push_back(v);
    std::vector<std::vector<Vertex>> out;
    for (auto& c : cells)
        if (!c.empty()) out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

// Exhaustive rooted-isomorphism test (roots must map to each other).
inline bool brute_rooted_iso(const unimod::RootedGraph& A, const unimod::RootedGraph& B) {
    if (A.graph.vertex_count() != B.graph.vertex_count() ||
        A.graph.edge_count() != B.graph.edge_count())
        return false;
    // relabel so the roots are vertex 0 on both sides
    auto rooted_first = [](const unimod::RootedGraph& R) {
        std::vector<Vertex> order{R.root};
        for (int v = 0; v < R.graph.vertex_count(); ++v)
            if (v != R.root) order.push_back(v);
        return unimod::induced_subgraph(R.graph, order);
    };
    Graph A0 = rooted_first(A), B0 = rooted_first(B);
    int n = A0.vertex_count();
    std::vector<int> map(n);
    std::vector<char> used(n, 0);
    if (A0.degree(0) != B0.degree(0)) return false;
    map[0] = 0;
    used[0] = 1;
    return detail::search_isos(A0, B0, map, used, 1,
                               [](const std::vector<int>&) { return true; });
}

inline bool brute_graph_iso(const Graph& A, const Graph& B) {
    if (A.vertex_count() != B.vertex_count() || A.edge_count() != B.edge_count()) return false;
    int n = A.vertex_count();
    std::vector<int> map(n);
    std::vector<char> used(n, 0);
    return detail::search_isos(A, B, map, used, 0,
                               [](const std::vector<int>&) { return true; });
}

// ---- explicit group multiplication tables -------------------------------

inline std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

// S_3 as the permutations of {0,1,2} in lexicographic order.
inline std::vector<std::vector<int>> s3_table() {
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int n = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> q(3);
            for (int x = 0; x < 3; ++x) q[x] = perms[i][perms[j][x]];
            t[i][j] = index_of(q);
        }
    return t;
}

// Transpositions (12) = [0,2,1] and (01) = [1,0,2] in the ordering above.
inline std::vector<int> s3_gens() { return {1, 2}; }

// D_4: elements r^i s^j encoded as i + 4j (r = rotation, s = reflection).
inline std::vector<std::vector<int>> d4_table() {
    auto mul = [](int a, int b) {
        int ia = a % 4, ja = a / 4, ib = b % 4, jb = b / 4;
        // (r^ia s^ja)(r^ib s^jb) = r^(ia + ib or ia - ib) s^(ja xor jb)
        int i = ja ? (ia - ib + 4) % 4 : (ia + ib) % 4;
        return i + 4 * (ja ^ jb);
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
    return t;
}

// Generators r, r^3, s (symmetric, identity-free).
inline std::vector<int> d4_gens() { return {1, 3, 4}; }

// Q_8: 1,-1,i,-i,j,-j,k,-k encoded 0..7 (sign = low bit).
inline std::vector<std::vector<int>> q8_table() {
    // basis products: i*j = k, j*k = i, k*i = j, anti-commutative, squares = -1
    auto mul = [](int a, int b) {
        int sa = a & 1, sb = b & 1, ua = a >> 1, ub = b >> 1;  // unit 0=1,1=i,2=j,3=k
        int sign = sa ^ sb, unit;
        if (ua == 0) {
            unit = ub;
        } else if (ub == 0) {
            unit = ua;
        } else if (ua == ub) {
            unit = 0;
            sign ^= 1;  // i*i = -1
        } else {
            unit = 6 - ua - ub;                       // the third basis unit
            if ((ua % 3) + 1 != ub) sign ^= 1;        // cyclic i->j->k->i is +
        }
        return (unit << 1) | sign;
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
    return t;
}

// Generators i, -i, j, -j.
inline std::vector<int> q8_gens() { return {2, 3, 4, 5}; }

}  // namespace testor

#endif
