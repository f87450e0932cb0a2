#include "unimod/families.hpp"

#include <algorithm>
#include <string>

namespace unimod {
namespace {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

struct Builder {
    int next = 0;
    Edges edges;

    int vertex() { return next++; }
    void edge(int u, int v) { edges.emplace_back(u, v); }

    // perfect binary subtree of given depth hanging under `parent`;
    // barred variant joins each sibling pair
    void binary_children(int parent, int depth, bool barred) {
        if (depth <= 0) return;
        int a = vertex(), b = vertex();
        edge(parent, a);
        edge(parent, b);
        if (barred) edge(a, b);
        binary_children(a, depth - 1, barred);
        binary_children(b, depth - 1, barred);
    }
};

}  // namespace

Graph cycle(int n, int delta) {
    if (n < 3) throw InvalidInput("cycle needs n >= 3");
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e), delta);
}

Graph path(int n, int delta) {
    if (n < 1) throw InvalidInput("path needs n >= 1");
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e), delta);
}

Graph complete(int n, int delta) {
    if (n < 1) throw InvalidInput("complete graph needs n >= 1");
    Edges e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e), delta);
}

Graph star(int leaves, int delta) {
    if (leaves < 1) throw InvalidInput("star needs at least one leaf");
    Edges e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, std::move(e), delta);
}

RootedGraph t_ball(int n, int delta) {
    if (n < 1) throw InvalidInput("T_ball needs n >= 1");
    Builder b;
    int t = b.vertex();
    for (int i = 0; i < 3; ++i) {
        int c = b.vertex();
        b.edge(t, c);
        b.binary_children(c, n - 1, false);
    }
    return {Graph(b.next, std::move(b.edges), delta), t};
}

RootedGraph lambda_ball(int n, int delta) {
    if (n < 0) throw InvalidInput("Lambda_ball needs n >= 0");
    Builder b;
    int root = b.vertex();
    b.binary_children(root, n, false);
    return {Graph(b.next, std::move(b.edges), delta), root};
}

RootedGraph barred_lambda_ball(int n, int delta) {
    if (n < 0) throw InvalidInput("barredLambda_ball needs n >= 0");
    Builder b;
    int root = b.vertex();
    b.binary_children(root, n, true);
    return {Graph(b.next, std::move(b.edges), delta), root};
}

namespace {

// Balls of trees given by a degree profile per vertex type: type_degree[t] is
// the total degree of a type-t vertex, child_type[t] the type of its children.
RootedGraph typed_tree_ball(int r, const std::vector<int>& type_degree,
                            const std::vector<int>& child_type, int root_type, int delta) {
    if (r < 0) throw InvalidInput("radius must be >= 0");
    Builder b;
    struct Item {
        int v, type, depth;
        bool has_parent;
    };
    std::vector<Item> queue{{b.vertex(), root_type, 0, false}};
    for (size_t i = 0; i < queue.size(); ++i) {
        Item it = queue[i];
        if (it.depth == r) continue;
        int children = type_degree[it.type] - (it.has_parent ? 1 : 0);
        for (int c = 0; c < children; ++c) {
            int w = b.vertex();
            b.edge(it.v, w);
            queue.push_back({w, child_type[it.type], it.depth + 1, true});
        }
    }
    return {Graph(b.next, std::move(b.edges), delta), 0};
}

}  // namespace

RootedGraph t34_ball(int r, int delta) {
    // types: 0 = degree-3 side (u), 1 = degree-4 side (v)
    return typed_tree_ball(r, {3, 4}, {1, 0}, 0, delta);
}

RootedGraph t324_ball(int r, int delta) {
    // types: 0 = u (deg 3, all neighbors w), 1 = v (deg 4, all neighbors w),
    // 2/3 = w (deg 2) whose child is v resp. u
    Builder b;
    struct Item {
        int v, type, depth;
        bool has_parent;
    };
    if (r < 0) throw InvalidInput("radius must be >= 0");
    std::vector<Item> queue{{b.vertex(), 0, 0, false}};
    static const int degree[] = {3, 4, 2, 2};
    static const int child[] = {2, 3, 1, 0};
    for (size_t i = 0; i < queue.size(); ++i) {
        Item it = queue[i];
        if (it.depth == r) continue;
        int children = degree[it.type] - (it.has_parent ? 1 : 0);
        for (int c = 0; c < children; ++c) {
            int w = b.vertex();
            b.edge(it.v, w);
            queue.push_back({w, child[it.type], it.depth + 1, true});
        }
    }
    return {Graph(b.next, std::move(b.edges), delta), 0};
}

Graph tree_plus_cycle(int n, int delta) {
    if (n < 1) throw InvalidInput("tree_plus_cycle needs n >= 1");
    Builder b;
    RootedGraph tn = t_ball(n, delta);
    for (auto [u, v] : tn.graph.edge_list()) b.edge(u, v);
    b.next = tn.graph.vertex_count();
    int bridge = b.vertex();
    b.edge(tn.root, bridge);
    int c0 = b.vertex();
    b.edge(bridge, c0);
    int prev = c0;
    for (int i = 1; i < 2 * n + 1; ++i) {
        int ci = b.vertex();
        b.edge(prev, ci);
        prev = ci;
    }
    b.edge(prev, c0);
    return Graph(b.next, std::move(b.edges), delta);
}

std::pair<std::int64_t, std::int64_t> counterexample_indices(int n) {
    if (n < 1) throw InvalidInput("stage must be >= 1");
    std::int64_t k = 1, l = 2, gap_sum = 0;  // gap_sum = sum (l_i - k_i) over past stages
    for (int i = 2; i <= n; ++i) {
        gap_sum += l - k;
        k = 15 * gap_sum - 2;
        // l = ceil(7k/6 + 1/3) = ceil((7k + 2)/6)
        l = (7 * k + 2 + 5) / 6;
    }
    return {k, l};
}

Graph counterexample_ball(std::int64_t m, int delta) {
    if (m < 1) throw InvalidInput("ball index must be >= 1");
    if (m > 2'000'000) throw InvalidInput("ball index too large");
    // decorated path vertices j (1-based) with k_i <= j <= l_i - 1 for some stage i
    std::vector<char> decorated(m + 1, 0);
    for (int stage = 1;; ++stage) {
        auto [k, l] = counterexample_indices(stage);
        if (k > m) break;
        for (std::int64_t j = k; j <= std::min<std::int64_t>(l - 1, m); ++j) decorated[j] = 1;
    }
    Builder b;
    // path vertex j has id j-1, for j = 1..m+1
    for (std::int64_t j = 0; j <= m; ++j) b.vertex();
    for (std::int64_t j = 0; j < m; ++j) b.edge(j, j + 1);
    for (std::int64_t j = 1; j <= m; ++j) {
        if (!decorated[j]) continue;
        int first = b.next;
        for (int c = 0; c < 5; ++c) b.vertex();
        for (int c = 0; c < 5; ++c) {
            b.edge(j - 1, first + c);
            for (int d = c + 1; d < 5; ++d) b.edge(first + c, first + d);
        }
    }
    return Graph(b.next, std::move(b.edges), delta);
}

std::pair<RootedGraph, RootedGraph> joined_tree_balls(int n, int delta) {
    if (n < 2) throw InvalidInput("joined trees need n >= 2");
    auto join = [&](int plain_depth, int barred_depth, bool root_plain) {
        Builder b;
        int x = b.vertex();
        b.binary_children(x, plain_depth, false);
        int y = b.vertex();
        b.edge(x, y);
        b.binary_children(y, barred_depth, true);
        return RootedGraph{Graph(b.next, std::move(b.edges), delta), root_plain ? x : y};
    };
    return {join(n, n - 1, true), join(n - 1, n, false)};
}

Graph cayley(const std::vector<std::vector<int>>& table, const std::vector<int>& gens,
             int delta) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw InvalidInput("empty group table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw InvalidInput("group table not square");
        for (int x : row)
            if (x < 0 || x >= n) throw InvalidInput("group table entry out of range");
    }
    // identity
    int e = -1;
    for (int g = 0; g < n; ++g) {
        bool id = true;
        for (int h = 0; h < n; ++h) id = id && table[g][h] == h && table[h][g] == h;
        if (id) {
            e = g;
            break;
        }
    }
    if (e < 0) throw InvalidInput("group table has no identity");
    // associativity and Latin-square property (which with identity gives inverses)
    for (int g = 0; g < n; ++g) {
        std::vector<char> seen(n, 0);
        for (int h = 0; h < n; ++h) {
            if (seen[table[g][h]]) throw InvalidInput("group table row is not a permutation");
            seen[table[g][h]] = 1;
        }
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (table[table[g][h]][k] != table[g][table[h][k]])
                    throw InvalidInput("group table is not associative");
    if (gens.empty()) throw InvalidInput("empty generator set");
    auto inverse = [&](int g) {
        for (int h = 0; h < n; ++h)
            if (table[g][h] == e) return h;
        throw InvalidInput("missing inverse");
    };
    for (int s : gens) {
        if (s < 0 || s >= n) throw InvalidInput("generator out of range");
        if (s == e) throw InvalidInput("generator set contains the identity");
        if (std::find(gens.begin(), gens.end(), inverse(s)) == gens.end())
            throw InvalidInput("generator set is not symmetric");
    }
    Edges edges;
    for (int g = 0; g < n; ++g)
        for (int s : gens) {
            int h = table[g][s];
            if (g < h) edges.emplace_back(g, h);
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph X(n, std::move(edges), delta);
    if (!is_connected(X)) throw InvalidInput("generator set does not generate the group");
    return X;
}

Generated generate(const FamilySpec& spec) {
    const auto& f = spec.family;
    auto ni = [&] { return static_cast<int>(spec.n); };
    if (f == "cycle") return {cycle(ni(), spec.delta), std::nullopt};
    if (f == "path") return {path(ni(), spec.delta), std::nullopt};
    if (f == "complete") return {complete(ni(), spec.delta), std::nullopt};
    if (f == "star") return {star(ni(), spec.delta), std::nullopt};
    if (f == "T_ball") {
        auto r = t_ball(ni(), spec.delta);
        return {r.graph, r.root};
    }
    if (f == "Lambda_ball") {
        auto r = lambda_ball(ni(), spec.delta);
        return {r.graph, r.root};
    }
    if (f == "barredLambda_ball") {
        auto r = barred_lambda_ball(ni(), spec.delta);
        return {r.graph, r.root};
    }
    if (f == "T34_ball") {
        auto r = t34_ball(ni(), spec.delta);
        return {r.graph, r.root};
    }
    if (f == "T324_ball") {
        auto r = t324_ball(ni(), spec.delta);
        return {r.graph, r.root};
    }
    if (f == "tree_plus_cycle") return {tree_plus_cycle(ni(), spec.delta), std::nullopt};
    if (f == "joined_trees_X") {
        auto r = joined_tree_balls(ni(), spec.delta).first;
        return {r.graph, r.root};
    }
    if (f == "joined_trees_Y") {
        auto r = joined_tree_balls(ni(), spec.delta).second;
        return {r.graph, r.root};
    }
    if (f == "avg_degree_counterexample")
        return {counterexample_ball(spec.n, spec.delta), std::nullopt};
    if (f == "cayley") return {cayley(spec.table, spec.gens, spec.delta), std::nullopt};
    throw InvalidInput("unknown family: " + f);
}

}  // namespace unimod
