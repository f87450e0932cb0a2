#include "unimod/limits.hpp"

#include <algorithm>

#include "unimod/errors.hpp"

namespace unimod {
namespace {

class ZOracle final : public RootedOracle {
public:
    explicit ZOracle(int delta) : delta_(delta) {}

    RootedGraph ball_at(int r) const override {
        if (r < 0) throw InvalidInput("negative radius");
        int n = 2 * r + 1;
        std::vector<std::pair<Vertex, Vertex>> e;
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        return {Graph(n, std::move(e), delta_), r};
    }

    std::string name() const override { return "Z"; }

private:
    int delta_;
};

// Balls of the canopy graphs S (plain) and S-bar (with sibling bars), rooted at
// a level-`level` vertex.  Level-1 vertices have no children; every vertex has
// a parent; in the barred variant every vertex also has a sibling sharing its
// parent, joined to it by a bar.
class CanopyOracle final : public RootedOracle {
public:
    CanopyOracle(int level, bool barred, int delta)
        : level_(level), barred_(barred), delta_(delta) {
        if (level < 1) throw InvalidInput("canopy level must be >= 1");
    }

    RootedGraph ball_at(int r) const override {
        if (r < 0) throw InvalidInput("negative radius");
        struct Node {
            int level;
            int parent = -1, sibling = -1;
            int child_a = -1, child_b = -1;
        };
        std::vector<Node> nodes{{level_}};
        std::vector<std::pair<Vertex, Vertex>> edges;
        std::vector<std::pair<int, int>> queue{{0, 0}};  // (vertex, distance)
        auto make_node = [&](int level) {
            nodes.push_back({level});
            return static_cast<int>(nodes.size()) - 1;
        };
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            auto [v, d] = queue[qi];
            if (d == r) continue;
            if (nodes[v].parent < 0) {
                int p = make_node(nodes[v].level + 1);
                nodes[v].parent = p;
                nodes[p].child_a = v;
                edges.emplace_back(v, p);
                queue.emplace_back(p, d + 1);
            }
            if (barred_ && nodes[v].sibling < 0) {
                int p = nodes[v].parent;
                int s = make_node(nodes[v].level);
                nodes[s].parent = p;
                nodes[s].sibling = v;
                nodes[v].sibling = s;
                (nodes[p].child_a < 0 ? nodes[p].child_a : nodes[p].child_b) = s;
                edges.emplace_back(v, s);
                edges.emplace_back(p, s);
                queue.emplace_back(s, d + 1);
            }
            if (nodes[v].level >= 2) {
                while (nodes[v].child_a < 0 || nodes[v].child_b < 0) {
                    int existing = nodes[v].child_a;
                    int c = make_node(nodes[v].level - 1);
                    nodes[c].parent = v;
                    (nodes[v].child_a < 0 ? nodes[v].child_a : nodes[v].child_b) = c;
                    edges.emplace_back(v, c);
                    if (barred_ && existing >= 0) {
                        nodes[c].sibling = existing;
                        nodes[existing].sibling = c;
                        edges.emplace_back(existing, c);
                    }
                    queue.emplace_back(c, d + 1);
                }
            }
        }
        return {Graph(static_cast<int>(nodes.size()), std::move(edges), delta_), 0};
    }

    std::string name() const override {
        return (barred_ ? "S-bar:u" : "S:u") + std::to_string(level_);
    }

private:
    int level_;
    bool barred_;
    int delta_;
};

class FiniteOracle final : public RootedOracle {
public:
    explicit FiniteOracle(RootedGraph R) : R_(std::move(R)) {}

    RootedGraph ball_at(int r) const override { return ball(R_.graph, R_.root, r); }

    std::string name() const override { return "finite"; }

private:
    RootedGraph R_;
};

}  // namespace

OraclePtr z_oracle(int delta) { return std::make_shared<ZOracle>(delta); }

OraclePtr canopy_oracle(int level, int delta) {
    return std::make_shared<CanopyOracle>(level, false, delta);
}

OraclePtr barred_canopy_oracle(int level, int delta) {
    return std::make_shared<CanopyOracle>(level, true, delta);
}

OraclePtr finite_oracle(RootedGraph R) { return std::make_shared<FiniteOracle>(std::move(R)); }

LimitMeasure LimitMeasure::dirac(OraclePtr oracle) {
    return LimitMeasure(
        [oracle](long k) -> Atom {
            if (k != 0) return {nullptr, 0};
            return {oracle, Rational(1)};
        },
        1, [](long k) { return k >= 1 ? Rational(0) : Rational(1); });
}

LimitMeasure LimitMeasure::mu_s(int delta) {
    return LimitMeasure(
        [delta](long k) -> Atom { return {canopy_oracle(static_cast<int>(k) + 1, delta), pow2(-(k + 1))}; },
        -1, [](long k) { return pow2(-k); });
}

LimitMeasure LimitMeasure::mu_s_bar(int delta) {
    return LimitMeasure(
        [delta](long k) -> Atom {
            return {barred_canopy_oracle(static_cast<int>(k) + 1, delta), pow2(-(k + 1))};
        },
        -1, [](long k) { return pow2(-k); });
}

LimitMeasure LimitMeasure::mixture(std::vector<std::pair<Rational, LimitMeasure>> components) {
    if (components.empty()) throw InvalidInput("empty mixture");
    Rational total = 0;
    for (auto& [w, m] : components) {
        if (w <= 0) throw InvalidInput("mixture weights must be positive");
        total += w;
    }
    if (total != 1) throw InvalidInput("mixture weights must sum to 1");
    long J = static_cast<long>(components.size());
    auto comps = std::make_shared<std::vector<std::pair<Rational, LimitMeasure>>>(
        std::move(components));
    long count = 0;
    for (auto& [w, m] : *comps) {
        if (m.atom_count() < 0) {
            count = -1;
            break;
        }
        count = std::max(count, J * m.atom_count());
    }
    return LimitMeasure(
        [comps, J](long k) -> Atom {
            long j = k % J, i = k / J;
            const auto& [w, m] = (*comps)[j];
            if (m.atom_count() >= 0 && i >= m.atom_count()) return {nullptr, 0};
            Atom a = m.atom(i);
            a.mass *= w;
            a.mass.canonicalize();
            return a;
        },
        count,
        [comps, J](long k) {
            long i = k / J;  // every stream has yielded at least i atoms
            Rational t = 0;
            for (const auto& [w, m] : *comps) t += w * m.tail_bound(i);
            t.canonicalize();
            return t;
        });
}

BallDistribution ball_distribution(const Graph& X, int r) {
    if (r < 0) throw InvalidInput("negative radius");
    BallDistribution out;
    out.radius = r;
    Rational unit(1, static_cast<unsigned long>(X.vertex_count()));
    for (Vertex x = 0; x < X.vertex_count(); ++x)
        out.freq[canonical_rooted(ball(X, x, r))] += unit;
    for (auto& [k, q] : out.freq) q.canonicalize();
    return out;
}

namespace {

constexpr long kMaxAtoms = 1'000'000;

// Shared truncation loop: feeds atoms to `sink` until the tail bound drops to
// eps (or the atom list ends); returns the certified slack.
template <class Sink>
Rational truncate_atoms(const LimitMeasure& m, const Rational& eps, Sink&& sink) {
    if (eps <= 0) throw InvalidInput("eps must be positive");
    long k = 0;
    while (true) {
        if (m.atom_count() >= 0 && k >= m.atom_count()) return Rational(0);
        if (m.tail_bound(k) <= eps) return m.tail_bound(k);
        if (k >= kMaxAtoms) throw ResourceLimit("limit-measure tail does not reach eps");
        LimitMeasure::Atom a = m.atom(k);
        if (a.mass > 0) sink(a);
        ++k;
    }
}

}  // namespace

TruncatedDistribution limit_ball_distribution(const LimitMeasure& m, int r, const Rational& eps) {
    if (r < 0) throw InvalidInput("negative radius");
    TruncatedDistribution out;
    out.dist.radius = r;
    out.slack = truncate_atoms(m, eps, [&](const LimitMeasure::Atom& a) {
        auto& q = out.dist.freq[canonical_rooted(a.oracle->ball_at(r))];
        q += a.mass;
        q.canonicalize();
    });
    return out;
}

RationalInterval integrate_limit(const LocalFunction& f, const LimitMeasure& m,
                                 const Rational& eps) {
    Rational sum = 0;
    Rational slack = truncate_atoms(m, eps, [&](const LimitMeasure::Atom& a) {
        sum += f.eval_ball(a.oracle->ball_at(f.radius())) * a.mass;
    });
    sum.canonicalize();
    Rational pad = f.bound() * slack;
    return {sum - pad, sum + pad};
}

Rational tv_distance(const BallDistribution& p, const BallDistribution& q) {
    if (p.radius != q.radius) throw InvalidInput("radius mismatch");
    Rational sum = 0;
    for (const auto& [k, v] : p.freq) {
        auto it = q.freq.find(k);
        Rational d = it == q.freq.end() ? v : v - it->second;
        sum += d >= 0 ? d : -d;
    }
    for (const auto& [k, v] : q.freq)
        if (!p.freq.count(k)) sum += v;
    sum /= 2;
    sum.canonicalize();
    return sum;
}

Rational tv_upper_bound(const BallDistribution& p, const TruncatedDistribution& q) {
    Rational t = tv_distance(p, q.dist) + q.slack / 2;
    t.canonicalize();
    return t;
}

std::vector<ConvergenceRow> convergence_report(const std::function<Graph(int)>& family,
                                               const LimitMeasure& target, int r,
                                               const std::vector<int>& ns,
                                               const Rational& eps) {
    TruncatedDistribution lim = limit_ball_distribution(target, r, eps);
    std::vector<ConvergenceRow> rows;
    for (int n : ns) rows.push_back({n, tv_upper_bound(ball_distribution(family(n), r), lim)});
    return rows;
}

Rational negligence_delta(const Graph& X, const std::vector<Vertex>& G, const LocalFunction& f) {
    if (G.empty()) return Rational(0);
    Rational a = integrate(f, law(X));
    Rational b = integrate(f, law(delete_subgraph(X, G)));
    Rational d = a - b;
    if (d < 0) d = -d;
    d.canonicalize();
    return d;
}

std::optional<int> ball_agreement_radius(const Graph& X, const std::vector<Vertex>& G, Vertex x) {
    for (Vertex v : G)
        if (v == x) throw InvalidInput("vertex must lie outside the deleted set");
    if (G.empty()) return std::nullopt;
    auto dist = bfs_distances(X, x);
    int d = -1;
    for (Vertex v : G) {
        if (!X.has_vertex(v)) throw InvalidInput("unknown vertex id");
        if (dist[v] >= 0 && (d < 0 || dist[v] < d)) d = dist[v];
    }
    if (d < 0) return std::nullopt;  // G lies in other components
    return d - 1;
}

Rational average_degree(const Graph& X) {
    Rational q(2 * static_cast<long>(X.edge_count()), static_cast<long>(X.vertex_count()));
    q.canonicalize();
    return q;
}

}  // namespace unimod
