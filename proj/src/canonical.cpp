#include "unimod/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "unimod/errors.hpp"

namespace unimod {
namespace {

// ---------- colored AHU encoding for rooted trees ----------

// Canonical parenthesis string of the tree component of `root`, colors in [0,26).
std::string ahu_string(const Graph& g, Vertex root, const std::vector<int>& colors) {
    // Iterative post-order; enc(v) = '(' color [sorted child encodings] ')'.
    std::vector<Vertex> order;   // post-order
    std::vector<Vertex> parent(g.vertex_count(), -2);
    std::vector<Vertex> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (Vertex w : g.neighbors(v))
            if (parent[w] == -2) {
                parent[w] = v;
                stack.push_back(w);
            }
    }
    std::reverse(order.begin(), order.end());  // children before parents
    std::vector<std::string> enc(g.vertex_count());
    std::vector<std::vector<std::string>> child_codes(g.vertex_count());
    for (Vertex v : order) {
        auto& parts = child_codes[v];
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        s += static_cast<char>('a' + colors[v]);
        for (auto& p : parts) s += p;
        s += ')';
        enc[v] = std::move(s);
        child_codes[v].clear();
        if (parent[v] >= 0) child_codes[parent[v]].push_back(enc[v]);
    }
    return enc[root];
}

bool connected_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

// ---------- individualization-refinement for general graphs ----------

class IRCanon {
public:
    IRCanon(const Graph& g, std::vector<int> init_colors, std::vector<int> cert_colors,
            long budget)
        : g_(g),
          n_(g.vertex_count()),
          cert_colors_(std::move(cert_colors)),
          budget_(budget) {
        // initial cells grouped by the seed color, ascending
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < n_; ++v) by_color[init_colors[v]].push_back(v);
        for (auto& [c, cell] : by_color) start_.push_back(std::move(cell));
    }

    std::string run() {
        search(start_);
        return best_;
    }

    const std::vector<std::vector<int>>& generators() const { return autos_; }

private:
    using Cells = std::vector<std::vector<int>>;

    void refine(Cells& cells) const {
        std::vector<int> cell_of(n_);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci)
                for (int v : cells[ci]) cell_of[v] = ci;
            Cells next;
            next.reserve(cells.size());
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<std::vector<int>, std::vector<int>> groups;
                for (int v : cell) {
                    std::vector<int> sig;
                    sig.reserve(g_.neighbors(v).size());
                    for (int w : g_.neighbors(v)) sig.push_back(cell_of[w]);
                    std::sort(sig.begin(), sig.end());
                    groups[std::move(sig)].push_back(v);
                }
                if (groups.size() > 1) changed = true;
                for (auto& [sig, vs] : groups) next.push_back(std::move(vs));
            }
            cells.swap(next);
        }
    }

    int target_cell(const Cells& cells) const {
        for (int i = 0; i < static_cast<int>(cells.size()); ++i)
            if (cells[i].size() > 1) return i;
        return -1;
    }

    std::string build_cert(const std::vector<int>& pos_to_v) const {
        std::string s = "G" + std::to_string(n_) + ";";
        for (int v : pos_to_v) s += static_cast<char>('0' + cert_colors_[v]);
        s += '|';
        int acc = 0, bits = 0;
        std::vector<char> at(n_);
        for (int i = 0; i < n_; ++i) {
            for (int v = 0; v < n_; ++v) at[v] = 0;
            for (int w : g_.neighbors(pos_to_v[i])) at[w] = 1;
            for (int j = 0; j < i; ++j) {
                acc = (acc << 1) | at[pos_to_v[j]];
                if (++bits == 4) {
                    s += "0123456789abcdef"[acc];
                    acc = bits = 0;
                }
            }
        }
        if (bits) s += "0123456789abcdef"[acc << (4 - bits)];
        return s;
    }

    void record_auto(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> sigma(n_);
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
            sigma[b[i]] = a[i];
            if (a[i] != b[i]) identity = false;
        }
        if (!identity) autos_.push_back(std::move(sigma));
    }

    void handle_leaf(const Cells& cells) {
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[i] = cells[i][0];
        std::string cert = build_cert(pos);
        if (first_pos_.empty()) {
            first_pos_ = pos;
            first_cert_ = cert;
        } else if (cert == first_cert_) {
            record_auto(first_pos_, pos);
        }
        if (best_.empty() || cert < best_) {
            best_ = cert;
            best_pos_ = pos;
        } else if (cert == best_ && pos != best_pos_) {
            record_auto(best_pos_, pos);
        }
    }

    // Union-find over vertices induced by generators fixing the current base.
    bool equivalent_to_explored(int v, const std::vector<int>& explored) {
        if (explored.empty() || autos_.empty()) return false;
        std::vector<int> uf(n_);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (const auto& sigma : autos_) {
            bool fixes_base = true;
            for (int b : base_)
                if (sigma[b] != b) {
                    fixes_base = false;
                    break;
                }
            if (!fixes_base) continue;
            for (int x = 0; x < n_; ++x) {
                int a = find(x), b = find(sigma[x]);
                if (a != b) uf[a] = b;
            }
        }
        int fv = find(v);
        for (int u : explored)
            if (find(u) == fv) return true;
        return false;
    }

    void search(Cells cells) {
        if (++nodes_ > budget_) throw ResourceLimit("canonicalization node budget exceeded");
        refine(cells);
        int t = target_cell(cells);
        if (t < 0) {
            handle_leaf(cells);
            return;
        }
        std::vector<int> cell = cells[t];
        std::vector<int> explored;
        for (int v : cell) {
            if (equivalent_to_explored(v, explored)) continue;
            Cells child = cells;
            child[t] = {v};
            std::vector<int> rest;
            for (int w : cell)
                if (w != v) rest.push_back(w);
            child.insert(child.begin() + t + 1, std::move(rest));
            base_.push_back(v);
            search(std::move(child));
            base_.pop_back();
            explored.push_back(v);
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> cert_colors_;
    long budget_;
    long nodes_ = 0;
    Cells start_;
    std::vector<int> base_;
    std::vector<std::vector<int>> autos_;
    std::vector<int> first_pos_, best_pos_;
    std::string first_cert_, best_;
};

// Certificate of one connected colored graph; cert colors must lie in [0,10),
// seed colors are any ints.  Trees take the linear AHU path when rootish
// (a designated root given), general graphs go through IR.
std::string connected_certificate(const Graph& g, const std::vector<int>& seed,
                                  const std::vector<int>& cert_colors,
                                  const CanonicalOptions& opt) {
    IRCanon ir(g, seed, cert_colors, opt.node_budget);
    return ir.run();
}

// Seed colors for a rooted certificate: (cert color, distance to root) ranked.
std::vector<int> root_distance_seed(const Graph& g, Vertex root,
                                    const std::vector<int>& cert_colors) {
    auto dist = bfs_distances(g, root);
    int n = g.vertex_count();
    std::vector<int> seed(n);
    for (int v = 0; v < n; ++v) seed[v] = cert_colors[v] * (n + 1) + dist[v];
    return seed;
}

// ---------- forest orbit ids via directed-edge interning ----------

class Interner {
public:
    long id(std::vector<long> v) {
        auto [it, added] = table_.try_emplace(std::move(v), next_);
        if (added) ++next_;
        return it->second;
    }

private:
    std::map<std::vector<long>, long> table_;
    long next_ = 0;
};

// For every vertex of a forest, an integer such that two vertices get the same
// value iff their rooted components are isomorphic (colors respected).
std::vector<long> forest_rooted_codes(const Graph& g, const std::vector<int>& colors) {
    int n = g.vertex_count();
    Interner intern;
    std::vector<long> down(n, -1), up(n, -1), full(n, -1);
    std::vector<Vertex> parent(n, -2);
    for (auto& comp : connected_components(g)) {
        Vertex root = comp[0];
        std::vector<Vertex> order{root};
        parent[root] = -1;
        for (size_t i = 0; i < order.size(); ++i)
            for (Vertex w : g.neighbors(order[i]))
                if (parent[w] == -2) {
                    parent[w] = order[i];
                    order.push_back(w);
                }
        // down codes, children before parents
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            Vertex v = *it;
            std::vector<long> sig{colors[v]};
            for (Vertex w : g.neighbors(v))
                if (w != parent[v]) sig.push_back(down[w]);
            std::sort(sig.begin() + 1, sig.end());
            down[v] = intern.id(std::move(sig));
        }
        // up codes, parents before children
        for (Vertex v : order) {
            for (Vertex c : g.neighbors(v)) {
                if (c == parent[v]) continue;
                std::vector<long> sig{colors[v]};
                if (parent[v] >= 0) sig.push_back(up[v]);
                for (Vertex w : g.neighbors(v))
                    if (w != parent[v] && w != c) sig.push_back(down[w]);
                std::sort(sig.begin() + 1, sig.end());
                up[c] = intern.id(std::move(sig));
            }
        }
        for (Vertex v : order) {
            std::vector<long> sig{colors[v]};
            if (parent[v] >= 0) sig.push_back(up[v]);
            for (Vertex w : g.neighbors(v))
                if (w != parent[v]) sig.push_back(down[w]);
            std::sort(sig.begin() + 1, sig.end());
            full[v] = intern.id(std::move(sig));
        }
    }
    return full;
}

// Groups the vertices of a connected graph into cells that provably lie in the
// same automorphism orbit, via the generators found by one uncolored IR pass.
// Cells may split a true orbit (never merge two); callers reconcile by key.
std::vector<std::vector<Vertex>> component_orbit_cells(const Graph& comp,
                                                       const CanonicalOptions& opt) {
    int n = comp.vertex_count();
    std::vector<int> zero(n, 0);
    IRCanon ir(comp, zero, zero, opt.node_budget);
    ir.run();
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const auto& sigma : ir.generators())
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(sigma[v]);
            if (a != b) uf[a] = b;
        }
    std::map<int, std::vector<Vertex>> cells;
    for (int v = 0; v < n; ++v) cells[find(v)].push_back(v);
    std::vector<std::vector<Vertex>> out;
    out.reserve(cells.size());
    for (auto& [r, vs] : cells) out.push_back(std::move(vs));
    return out;
}

// Certificate (no version prefix) of the component of `root`, rooted there.
std::string rooted_component_cert(const Graph& comp, Vertex root,
                                  const std::vector<int>& cert_colors,
                                  const CanonicalOptions& opt) {
    if (connected_tree(comp)) return "T" + ahu_string(comp, root, cert_colors);
    return connected_certificate(comp, root_distance_seed(comp, root, cert_colors),
                                 cert_colors, opt);
}

}  // namespace

ClassKey canonical_rooted(const RootedGraph& R, const CanonicalOptions& opt) {
    RootedGraph C = component(R.graph, R.root);
    std::vector<int> colors(C.graph.vertex_count(), 1);
    colors[C.root] = 0;
    return "v1R:" + rooted_component_cert(C.graph, C.root, colors, opt);
}

ClassKey canonical_birooted(const BirootedGraph& B, const CanonicalOptions& opt) {
    if (!B.graph.adjacent(B.root, B.coroot))
        throw InvalidInput("coroot must be a neighbor of the root");
    // component() puts the root at 0; track the coroot through the relabeling
    auto dist = bfs_distances(B.graph, B.root);
    std::vector<Vertex> keep{B.root};
    for (Vertex v = 0; v < B.graph.vertex_count(); ++v)
        if (v != B.root && dist[v] >= 0) keep.push_back(v);
    Graph comp = induced_subgraph(B.graph, keep);
    Vertex coroot = -1;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        if (keep[i] == B.coroot) coroot = i;
    std::vector<int> colors(comp.vertex_count(), 2);
    colors[0] = 0;
    colors[coroot] = 1;
    return "v1B:" + rooted_component_cert(comp, 0, colors, opt);
}

ClassKey canonical_graph_key(const Graph& X, const CanonicalOptions& opt) {
    std::vector<std::string> certs;
    for (auto& cv : connected_components(X)) {
        Graph comp = induced_subgraph(X, cv);
        std::vector<int> colors(comp.vertex_count(), 0);
        if (connected_tree(comp)) {
            // root at the centroid-free canonical choice: tree center(s)
            auto ecc_from = [&](Vertex s) { return bfs_distances(comp, s); };
            auto d0 = ecc_from(0);
            Vertex far1 = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
            auto d1 = ecc_from(far1);
            Vertex far2 = static_cast<Vertex>(std::max_element(d1.begin(), d1.end()) - d1.begin());
            // walk the middle of the far1..far2 path
            auto d2 = ecc_from(far2);
            int diam = d1[far2];
            std::vector<Vertex> centers;
            for (Vertex v = 0; v < comp.vertex_count(); ++v)
                if (d1[v] + d2[v] == diam &&
                    std::max(d1[v], d2[v]) == (diam + 1) / 2)
                    centers.push_back(v);
            std::string best;
            for (Vertex c : centers) {
                std::string s = "T" + ahu_string(comp, c, colors);
                if (best.empty() || s < best) best = s;
            }
            certs.push_back(best);
        } else {
            std::vector<int> seed(comp.vertex_count(), 0);
            certs.push_back(connected_certificate(comp, seed, colors, opt));
        }
    }
    std::sort(certs.begin(), certs.end());
    std::string out = "v1U:";
    for (auto& c : certs) out += c + "+";
    return out;
}

Rational rho(const RootedGraph& A, const RootedGraph& B) {
    if (canonical_rooted(A) == canonical_rooted(B)) return Rational(0);
    int r = 0;
    for (int s = 1;; ++s) {
        ClassKey ka = canonical_rooted(ball(A.graph, A.root, s));
        ClassKey kb = canonical_rooted(ball(B.graph, B.root, s));
        if (ka != kb) break;
        r = s;
    }
    return pow2(-r);
}

HostClasses host_classes(const Graph& X, const CanonicalOptions& opt) {
    int n = X.vertex_count();
    std::vector<std::pair<ClassKey, std::vector<Vertex>>> keyed;
    if (is_forest(X)) {
        std::vector<int> colors(n, 0);
        auto codes = forest_rooted_codes(X, colors);
        std::map<long, std::vector<Vertex>> by_code;
        for (Vertex v = 0; v < n; ++v) by_code[codes[v]].push_back(v);
        // canonical key from one representative per group
        for (auto& [c, vs] : by_code)
            keyed.emplace_back(canonical_rooted({X, vs[0]}, opt), std::move(vs));
    } else {
        std::map<ClassKey, std::vector<Vertex>> by_key;
        for (auto& cv : connected_components(X)) {
            Graph comp = induced_subgraph(X, cv);
            // one rooted key per proven-same-orbit cell, not per vertex
            std::vector<std::vector<Vertex>> cells;
            if (connected_tree(comp)) {
                std::vector<int> colors(comp.vertex_count(), 0);
                auto codes = forest_rooted_codes(comp, colors);
                std::map<long, std::vector<Vertex>> by_code;
                for (Vertex v = 0; v < comp.vertex_count(); ++v)
                    by_code[codes[v]].push_back(v);
                for (auto& [c, vs] : by_code) cells.push_back(std::move(vs));
            } else {
                cells = component_orbit_cells(comp, opt);
            }
            for (auto& cell : cells) {
                auto& vs = by_key[canonical_rooted({comp, cell[0]}, opt)];
                for (Vertex v : cell) vs.push_back(cv[v]);
            }
        }
        for (auto& [k, vs] : by_key) {
            std::sort(vs.begin(), vs.end());
            keyed.emplace_back(k, std::move(vs));
        }
    }
    std::sort(keyed.begin(), keyed.end());
    HostClasses hc;
    hc.orbit_of.assign(n, -1);
    for (int k = 0; k < static_cast<int>(keyed.size()); ++k) {
        hc.key.push_back(keyed[k].first);
        hc.orbit.push_back(std::move(keyed[k].second));
        hc.index_of[hc.key.back()] = k;
        for (Vertex v : hc.orbit.back()) hc.orbit_of[v] = k;
    }
    return hc;
}

std::vector<std::vector<Vertex>> automorphism_orbits(const Graph& X,
                                                     const CanonicalOptions& opt) {
    return host_classes(X, opt).orbit;
}

int stabilizer_orbit_count(const Graph& X, Vertex a, Vertex b, const CanonicalOptions& opt) {
    if (!X.adjacent(a, b)) throw InvalidInput("b must be a neighbor of a");
    ClassKey target = canonical_birooted({X, a, b}, opt);
    int count = 0;
    for (Vertex y : X.neighbors(a))
        if (canonical_birooted({X, a, y}, opt) == target) ++count;
    return count;
}

}  // namespace unimod
