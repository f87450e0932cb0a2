#include "unimod/quotient.hpp"

#include <algorithm>

#include "unimod/canonical.hpp"
#include "unimod/errors.hpp"

namespace unimod {
namespace {

struct QuotientIndex {
    std::map<std::string, int> id;
    // adjacency as edge indices per orbit
    std::vector<std::vector<int>> incident;
};

QuotientIndex index_quotient(const LabeledQuotient& Q) {
    QuotientIndex qi;
    if (Q.orbits.empty()) throw InvalidInput("quotient has no orbits");
    for (const auto& o : Q.orbits)
        if (!qi.id.emplace(o, static_cast<int>(qi.id.size())).second)
            throw InvalidInput("duplicate orbit label: " + o);
    qi.incident.resize(Q.orbits.size());
    for (int e = 0; e < static_cast<int>(Q.edges.size()); ++e) {
        const auto& ed = Q.edges[e];
        if (!qi.id.count(ed.a) || !qi.id.count(ed.b))
            throw InvalidInput("edge references unknown orbit");
        if (ed.m_ab <= 0 || ed.m_ba <= 0) throw InvalidInput("labels must be positive");
        qi.incident[qi.id.at(ed.a)].push_back(e);
        if (ed.a != ed.b) qi.incident[qi.id.at(ed.b)].push_back(e);
    }
    return qi;
}

}  // namespace

ConsistencyVerdict validate_consistency(const LabeledQuotient& Q) {
    QuotientIndex qi = index_quotient(Q);
    int n = static_cast<int>(Q.orbits.size());
    // spanning tree by BFS from the first orbit
    std::vector<int> parent(n, -2), parent_edge(n, -1);
    std::vector<Rational> pot(n);
    std::vector<int> order{0};
    parent[0] = -1;
    pot[0] = 1;
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int e : qi.incident[v]) {
            const auto& ed = Q.edges[e];
            int va = qi.id.at(ed.a), vb = qi.id.at(ed.b);
            int w = va == v ? vb : va;
            if (parent[w] != -2) continue;
            parent[w] = v;
            parent_edge[w] = e;
            pot[w] = va == v ? pot[v] * Rational(ed.m_ab) / Rational(ed.m_ba)
                             : pot[v] * Rational(ed.m_ba) / Rational(ed.m_ab);
            pot[w].canonicalize();
            order.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != n) throw InvalidInput("quotient is not connected");
    // every edge must respect the potentials
    for (int e = 0; e < static_cast<int>(Q.edges.size()); ++e) {
        const auto& ed = Q.edges[e];
        int va = qi.id.at(ed.a), vb = qi.id.at(ed.b);
        Rational lhs = pot[va] * Rational(ed.m_ab) / Rational(ed.m_ba);
        lhs.canonicalize();
        if (lhs == pot[vb]) continue;
        Rational product = lhs / pot[vb];
        product.canonicalize();
        // witness cycle: tree path b -> a, then the edge back to b
        std::vector<int> up_a, up_b;  // vertex .. lca, along tree parents
        for (int x = va; x != -1; x = parent[x]) up_a.push_back(x);
        for (int x = vb; x != -1; x = parent[x]) up_b.push_back(x);
        while (up_a.size() > 1 && up_b.size() > 1 &&
               up_a[up_a.size() - 2] == up_b[up_b.size() - 2])
            up_a.pop_back(), up_b.pop_back();
        // walk vb -> lca -> va, then close with the offending edge back to vb
        std::vector<std::string> cycle;
        for (int x : up_b) cycle.push_back(Q.orbits[x]);
        for (size_t i = up_a.size() - 1; i-- > 0;) cycle.push_back(Q.orbits[up_a[i]]);
        cycle.push_back(Q.orbits[vb]);
        return {false, CycleWitness{std::move(cycle), product}};
    }
    return {true, std::nullopt};
}

std::map<std::string, Rational> path_product_measure(const LabeledQuotient& Q,
                                                     const std::string& base,
                                                     const Rational& p) {
    if (p <= 0) throw InvalidInput("base mass must be positive");
    auto verdict = validate_consistency(Q);
    if (!verdict.pass) throw InvalidInput("inconsistent quotient");
    QuotientIndex qi = index_quotient(Q);
    if (!qi.id.count(base)) throw InvalidInput("unknown base orbit");
    int n = static_cast<int>(Q.orbits.size());
    std::vector<Rational> pot(n, Rational(-1));
    std::vector<int> order{qi.id.at(base)};
    pot[order[0]] = p;
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int e : qi.incident[v]) {
            const auto& ed = Q.edges[e];
            int va = qi.id.at(ed.a), vb = qi.id.at(ed.b);
            int w = va == v ? vb : va;
            if (pot[w] >= 0) continue;
            pot[w] = va == v ? pot[v] * Rational(ed.m_ab) / Rational(ed.m_ba)
                             : pot[v] * Rational(ed.m_ba) / Rational(ed.m_ab);
            pot[w].canonicalize();
            order.push_back(w);
        }
    }
    std::map<std::string, Rational> out;
    for (int v = 0; v < n; ++v) out[Q.orbits[v]] = pot[v];
    return out;
}

JudicialityVerdict decide_judicial(const LabeledQuotient& Q) {
    auto verdict = validate_consistency(Q);
    if (!verdict.pass) {
        JudicialityVerdict out;
        out.judicial = false;
        out.reason = LawlessReason::InconsistentCycle;
        out.witness = verdict.witness;
        return out;
    }
    auto raw = path_product_measure(Q, Q.orbits[0], Rational(1));
    Rational total = 0;
    for (const auto& [o, q] : raw) total += q;
    JudicialityVerdict out;
    out.judicial = true;
    for (auto& [o, q] : raw) {
        Rational m = q / total;
        m.canonicalize();
        out.measure.emplace(o, m);
    }
    return out;
}

Rational RayMeasure::mass(long i) const {
    if (i < 0) throw InvalidInput("negative orbit index");
    long p = static_cast<long>(prefix_mass.size()) - 1;
    if (i <= p) return prefix_mass[i];
    Rational q = prefix_mass[p];
    for (long j = p; j < i; ++j) q *= tail_ratio;
    q.canonicalize();
    return q;
}

JudicialityVerdict decide_judicial(const RayQuotient& Q) {
    for (auto [f, b] : Q.prefix)
        if (f <= 0 || b <= 0) throw InvalidInput("labels must be positive");
    if (Q.tail.first <= 0 || Q.tail.second <= 0) throw InvalidInput("labels must be positive");
    JudicialityVerdict out;
    Rational ratio = Rational(Q.tail.first) / Rational(Q.tail.second);
    ratio.canonicalize();
    if (ratio >= 1) {
        out.judicial = false;
        out.reason = LawlessReason::DivergentMass;
        return out;
    }
    std::vector<Rational> u{Rational(1)};
    for (auto [f, b] : Q.prefix) {
        Rational next = u.back() * Rational(f) / Rational(b);
        next.canonicalize();
        u.push_back(next);
    }
    Rational total = 0;
    for (size_t i = 0; i + 1 < u.size(); ++i) total += u[i];
    total += u.back() / (Rational(1) - ratio);  // geometric tail, closed form
    for (auto& q : u) {
        q /= total;
        q.canonicalize();
    }
    out.judicial = true;
    out.ray = RayMeasure{std::move(u), ratio};
    return out;
}

bool vertex_transitive_judicial(const std::vector<std::pair<long, long>>& loop_labels) {
    return std::all_of(loop_labels.begin(), loop_labels.end(),
                       [](const std::pair<long, long>& p) { return p.first == p.second; });
}

LabeledQuotient quotient_of_finite(const Graph& X) {
    if (!is_connected(X)) throw InvalidInput("quotient of a disconnected graph");
    HostClasses hc = host_classes(X);
    LabeledQuotient Q;
    for (int k = 0; k < hc.count(); ++k) Q.orbits.push_back(std::to_string(k));
    for (int k = 0; k < hc.count(); ++k) {
        Vertex a = hc.rep(k);
        // stabilizer-orbits of N(a), grouped by birooted class, in key order
        std::map<ClassKey, std::vector<Vertex>> groups;
        for (Vertex y : X.neighbors(a)) groups[canonical_birooted({X, a, y})].push_back(y);
        for (const auto& [key, ys] : groups) {
            int j = hc.orbit_of[ys[0]];
            if (j < k) continue;  // emitted from the other side
            long m_fwd = static_cast<long>(ys.size());
            long m_bwd = stabilizer_orbit_count(X, ys[0], a);
            Q.edges.push_back({Q.orbits[k], Q.orbits[j], m_fwd, m_bwd});
        }
    }
    return Q;
}

}  // namespace unimod
