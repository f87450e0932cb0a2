#ifndef UNIMOD_QUOTIENT_HPP
#define UNIMOD_QUOTIENT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unimod/graph.hpp"
#include "unimod/rational.hpp"

namespace unimod {

// Finite description of a connected graph by its vertex orbits, with directed
// labels m(a->b) = |G_a b| on each adjacency.  Loops ({a,a}) may repeat: one
// entry per stabilizer-orbit of same-orbit neighbors.  Parallel entries between
// two distinct orbits are allowed and must be mutually consistent.
struct QuotientEdge {
    std::string a, b;
    long m_ab = 1, m_ba = 1;
};

struct LabeledQuotient {
    std::vector<std::string> orbits;
    std::vector<QuotientEdge> edges;
};

// One-ended ray of orbits 0, 1, 2, ...: directed label pairs
// (m(i->i+1), m(i+1->i)) for each prefix position, then one pair repeated
// forever.  Only period-1 tails are supported.
struct RayQuotient {
    std::vector<std::pair<long, long>> prefix;
    std::pair<long, long> tail{1, 1};
};

struct CycleWitness {
    std::vector<std::string> cycle;  // orbit labels, closed walk
    Rational product;                // forward/backward label product, != 1
};

struct ConsistencyVerdict {
    bool pass = false;
    std::optional<CycleWitness> witness;
};

// Every cycle's product of m(forward)/m(backward) must be 1 (checked via
// spanning-tree potentials on the non-tree edges).
ConsistencyVerdict validate_consistency(const LabeledQuotient& Q);

// mu[base] = p, propagated along any path by mu[next] = mu[cur] * m_fwd/m_bwd.
// Requires a consistent quotient.
std::map<std::string, Rational> path_product_measure(const LabeledQuotient& Q,
                                                     const std::string& base, const Rational& p);

enum class LawlessReason { InconsistentCycle, DivergentMass };

struct RayMeasure {
    std::vector<Rational> prefix_mass;  // orbits 0..prefix size
    Rational tail_ratio;                // mass(i+1)/mass(i) past the prefix
    Rational mass(long i) const;        // orbit index, 0-based
};

struct JudicialityVerdict {
    bool judicial = false;
    std::map<std::string, Rational> measure;  // finite quotients
    std::optional<RayMeasure> ray;            // ray quotients
    std::optional<LawlessReason> reason;
    std::optional<CycleWitness> witness;
};

JudicialityVerdict decide_judicial(const LabeledQuotient& Q);
JudicialityVerdict decide_judicial(const RayQuotient& Q);

// Single-orbit quotient: judicial iff every loop label pair is balanced.
bool vertex_transitive_judicial(const std::vector<std::pair<long, long>>& loop_labels);

// The labeled quotient of a connected finite graph, computed from its orbits
// and stabilizer-orbit counts.
LabeledQuotient quotient_of_finite(const Graph& X);

}  // namespace unimod

#endif
