#include "unimod/measures.hpp"

#include <algorithm>

#include "unimod/errors.hpp"

namespace unimod {

SustainedMeasure::SustainedMeasure(Graph host, std::vector<Rational> mass_per_class)
    : host_(std::move(host)), classes_(host_classes(host_)), mass_(std::move(mass_per_class)) {
    if (static_cast<int>(mass_.size()) != classes_.count())
        throw InvalidInput("measure must assign a mass to every class of the host");
    Rational total = 0;
    for (auto& q : mass_) {
        q.canonicalize();
        if (q < 0) throw InvalidInput("negative mass");
        total += q;
    }
    if (total != 1) throw InvalidInput("masses must sum to 1, got " + rat_to_string(total));
}

bool SustainedMeasure::strictly_sustained() const {
    return std::all_of(mass_.begin(), mass_.end(), [](const Rational& q) { return q > 0; });
}

SustainedMeasure measure_from_vertex_masses(
    const Graph& host, const std::vector<std::pair<Vertex, Rational>>& mass) {
    HostClasses hc = host_classes(host);
    std::vector<Rational> per_class(hc.count(), Rational(-1));
    for (const auto& [v, q] : mass) {
        if (!host.has_vertex(v)) throw InvalidInput("unknown representative vertex");
        int k = hc.orbit_of[v];
        if (per_class[k] >= 0) throw InvalidInput("class named twice by representatives");
        per_class[k] = q;
    }
    for (auto& q : per_class)
        if (q < 0) throw InvalidInput("measure misses a class of the host");
    return SustainedMeasure(host, std::move(per_class));
}

SustainedMeasure law(const Graph& X) {
    HostClasses hc = host_classes(X);
    std::vector<Rational> mass;
    mass.reserve(hc.count());
    for (int k = 0; k < hc.count(); ++k)
        mass.emplace_back(static_cast<long>(hc.orbit[k].size()), static_cast<long>(X.vertex_count()));
    return SustainedMeasure(X, std::move(mass));
}

LocalFunction LocalFunction::degree(int delta) {
    return LocalFunction(1, Rational(delta), [](const RootedGraph& b) {
        return Rational(b.graph.degree(b.root));
    });
}

LocalFunction LocalFunction::constant(const Rational& c) {
    Rational bound = c >= 0 ? c : Rational(-c);
    return LocalFunction(0, bound, [c](const RootedGraph&) { return c; });
}

LocalFunction LocalFunction::indicator(std::vector<ClassKey> keys, int radius) {
    std::sort(keys.begin(), keys.end());
    return LocalFunction(radius, Rational(1), [keys = std::move(keys)](const RootedGraph& b) {
        return Rational(std::binary_search(keys.begin(), keys.end(), canonical_rooted(b)) ? 1 : 0);
    });
}

LocalFunction LocalFunction::from_table(int radius, std::map<ClassKey, Rational> table,
                                        Rational default_value) {
    Rational bound = default_value >= 0 ? default_value : Rational(-default_value);
    for (const auto& [k, v] : table) bound = std::max(bound, v >= 0 ? v : Rational(-v));
    return LocalFunction(radius, bound,
                         [table = std::move(table), default_value](const RootedGraph& b) {
                             auto it = table.find(canonical_rooted(b));
                             return it == table.end() ? default_value : it->second;
                         });
}

Rational LocalFunction::operator()(const Graph& X, Vertex x) const {
    return eval_(ball(X, x, radius_));
}

Rational LocalFunction::eval_ball(const RootedGraph& ball_r) const { return eval_(ball_r); }

Rational integrate(const LocalFunction& f, const SustainedMeasure& m) {
    Rational sum = 0;
    for (int k = 0; k < m.classes().count(); ++k)
        if (m.mass_at(k) != 0) sum += f(m.host(), m.classes().rep(k)) * m.mass_at(k);
    return sum;
}

namespace {

Rational weight_lookup(const BirootedWeight& f, const ClassKey& key) {
    auto it = f.table.find(key);
    return it == f.table.end() ? f.default_value : it->second;
}

ClassKey birooted_ball_key(const Graph& X, Vertex x, Vertex y, int radius) {
    auto dist = bfs_distances(X, x);
    std::vector<Vertex> keep{x};
    for (Vertex v = 0; v < X.vertex_count(); ++v)
        if (v != x && dist[v] >= 0 && dist[v] <= radius) keep.push_back(v);
    Graph b = induced_subgraph(X, keep);
    int coroot = -1;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        if (keep[i] == y) coroot = i;
    return canonical_birooted({b, 0, coroot});
}

}  // namespace

std::pair<Rational, Rational> transport_sums(const BirootedWeight& f, const SustainedMeasure& m) {
    if (f.radius < 1) throw InvalidInput("birooted weight radius must be >= 1");
    if (f.default_value < 0) throw InvalidInput("birooted weight must be nonnegative");
    for (const auto& [k, v] : f.table)
        if (v < 0) throw InvalidInput("birooted weight must be nonnegative");
    Rational out = 0, in = 0;
    const Graph& X = m.host();
    for (int k = 0; k < m.classes().count(); ++k) {
        if (m.mass_at(k) == 0) continue;
        Vertex x = m.classes().rep(k);
        for (Vertex y : X.neighbors(x)) {
            out += weight_lookup(f, birooted_ball_key(X, x, y, f.radius)) * m.mass_at(k);
            in += weight_lookup(f, birooted_ball_key(X, y, x, f.radius)) * m.mass_at(k);
        }
    }
    return {out, in};
}

UnimodularityVerdict check_unimodular_definitional(const SustainedMeasure& m) {
    const Graph& X = m.host();
    std::map<ClassKey, std::pair<Rational, Rational>> sides;  // class -> (out, in)
    for (int k = 0; k < m.classes().count(); ++k) {
        Vertex x = m.classes().rep(k);
        for (Vertex y : X.neighbors(x)) {
            sides[canonical_birooted({X, x, y})].first += m.mass_at(k);
            sides[canonical_birooted({X, y, x})].second += m.mass_at(k);
        }
    }
    for (const auto& [key, lr] : sides)
        if (lr.first != lr.second)
            return {false, UnimodularityWitness{key, lr.first, lr.second}};
    return {true, std::nullopt};
}

UnimodularityVerdict check_unimodular_criterion(const SustainedMeasure& m) {
    const Graph& X = m.host();
    if (!is_connected(X)) throw InvalidInput("criterion check requires a connected host");
    for (int k = 0; k < m.classes().count(); ++k) {
        Vertex a = m.classes().rep(k);
        for (Vertex b : X.neighbors(a)) {
            Rational lhs = Rational(stabilizer_orbit_count(X, a, b)) * m.mass_of_vertex(a);
            Rational rhs = Rational(stabilizer_orbit_count(X, b, a)) * m.mass_of_vertex(b);
            if (lhs != rhs)
                return {false, UnimodularityWitness{canonical_birooted({X, a, b}), lhs, rhs}};
        }
    }
    return {true, std::nullopt};
}

std::vector<Rational> solve_linear_exact(std::vector<std::vector<Integer>> rows,
                                         std::vector<Integer> rhs) {
    size_t m = rows.size();
    if (m == 0) throw InvalidInput("empty system");
    size_t n = rows[0].size();
    for (size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n) throw InvalidInput("ragged system");
        rows[i].push_back(rhs.at(i));  // augment
    }
    // fraction-free (Bareiss) elimination with row pivoting
    Integer prev = 1;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t col = 0; col < n && r < m; ++col) {
        size_t piv = r;
        while (piv < m && rows[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t i = r + 1; i < m; ++i) {
            for (size_t j = col + 1; j <= n; ++j) {
                Integer t = rows[r][col] * rows[i][j] - rows[i][col] * rows[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                rows[i][j] = t;
            }
            rows[i][col] = 0;
        }
        prev = rows[r][col];
        pivot_col.push_back(col);
        ++r;
    }
    for (size_t i = r; i < m; ++i)
        if (rows[i][n] != 0) throw InternalError("inconsistent linear system");
    if (r < n) throw InternalError("underdetermined linear system");
    // back substitution over the rationals
    std::vector<Rational> x(n);
    for (size_t i = r; i-- > 0;) {
        size_t col = pivot_col[i];
        Rational acc(rows[i][n]);
        for (size_t j = col + 1; j < n; ++j) acc -= Rational(rows[i][j]) * x[j];
        x[col] = acc / Rational(rows[i][col]);
        x[col].canonicalize();
    }
    return x;
}

SolveResult solve_unimodular(const Graph& X) {
    auto comps = connected_components(X);
    std::map<ClassKey, std::vector<int>> groups;
    std::map<ClassKey, Graph> rep_graph;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        Graph comp = induced_subgraph(X, comps[c]);
        ClassKey key = canonical_graph_key(comp);
        auto [it, added] = rep_graph.try_emplace(key, comp);
        (void)it;
        groups[key].push_back(c);
    }
    SolveResult out;
    for (auto& [key, members] : groups) {
        const Graph& C = rep_graph.at(key);
        HostClasses hc = host_classes(C);
        int n = hc.count();
        std::vector<std::vector<Integer>> rows;
        std::vector<Integer> rhs;
        for (int k = 0; k < n; ++k) {
            Vertex a = hc.rep(k);
            for (Vertex b : C.neighbors(a)) {
                std::vector<Integer> row(n, 0);
                row[hc.orbit_of[a]] += stabilizer_orbit_count(C, a, b);
                row[hc.orbit_of[b]] -= stabilizer_orbit_count(C, b, a);
                bool zero = std::all_of(row.begin(), row.end(),
                                        [](const Integer& z) { return z == 0; });
                if (!zero) {
                    rows.push_back(std::move(row));
                    rhs.emplace_back(0);
                }
            }
        }
        rows.emplace_back(n, Integer(1));  // normalization appended last
        rhs.emplace_back(1);
        auto x = solve_linear_exact(std::move(rows), std::move(rhs));
        for (const auto& q : x)
            if (q <= 0) throw InternalError("solved measure not strictly positive");
        out.parts.push_back({C, members, SustainedMeasure(C, std::move(x))});
    }
    return out;
}

SustainedMeasure law_of_disjoint_union(const std::vector<std::pair<Graph, int>>& parts) {
    if (parts.empty()) throw InvalidInput("no parts");
    std::vector<ClassKey> part_keys;
    for (const auto& [g, mult] : parts) part_keys.push_back(canonical_graph_key(g));
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (part_keys[i] == part_keys[j])
                throw InvalidInput("parts must be pairwise non-isomorphic");
    Graph host = disjoint_union(parts);
    Rational total(host.vertex_count());
    std::map<ClassKey, Rational> by_key;
    for (const auto& [g, mult] : parts) {
        // weight b_k |V(X^k)| / |V(X)| spread over the law of the part
        Rational w = Rational(static_cast<long>(mult) * g.vertex_count()) / total;
        SustainedMeasure lg = law(g);
        for (int k = 0; k < lg.classes().count(); ++k)
            by_key[lg.classes().key[k]] += w * lg.mass_at(k);
    }
    HostClasses hc = host_classes(host);
    std::vector<Rational> mass(hc.count());
    for (int k = 0; k < hc.count(); ++k) {
        auto it = by_key.find(hc.key[k]);
        if (it == by_key.end()) throw InternalError("union class missing from parts");
        mass[k] = it->second;
    }
    return SustainedMeasure(host, std::move(mass));
}

SustainedMeasure restrict_to_component(const SustainedMeasure& m, Vertex y) {
    RootedGraph Y = component(m.host(), y);
    HostClasses hy = host_classes(Y.graph);
    Rational a = 0;
    std::vector<Rational> mass(hy.count());
    for (int k = 0; k < hy.count(); ++k) {
        auto it = m.classes().index_of.find(hy.key[k]);
        if (it == m.classes().index_of.end()) throw InternalError("component class not in host");
        mass[k] = m.mass_at(it->second);
        a += mass[k];
    }
    if (a == 0) throw NullComponent("component of the given vertex carries zero mass");
    for (auto& q : mass) q /= a;
    return SustainedMeasure(Y.graph, std::move(mass));
}

}  // namespace unimod
