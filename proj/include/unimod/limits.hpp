#ifndef UNIMOD_LIMITS_HPP
#define UNIMOD_LIMITS_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unimod/canonical.hpp"
#include "unimod/graph.hpp"
#include "unimod/measures.hpp"
#include "unimod/rational.hpp"

namespace unimod {

// A fixed (possibly infinite) rooted graph, accessed through its balls.
class RootedOracle {
public:
    virtual ~RootedOracle() = default;
    virtual RootedGraph ball_at(int r) const = 0;
    virtual std::string name() const = 0;
};

using OraclePtr = std::shared_ptr<const RootedOracle>;

OraclePtr z_oracle(int delta = kDefaultDelta);                        // bi-infinite path
OraclePtr canopy_oracle(int level, int delta = kDefaultDelta);        // S at u_level
OraclePtr barred_canopy_oracle(int level, int delta = kDefaultDelta); // S-bar at u-bar_level
OraclePtr finite_oracle(RootedGraph R);

// Purely atomic limit measure: a countable list of (oracle, mass) atoms with a
// certified bound on the mass beyond the first k atoms.
class LimitMeasure {
public:
    struct Atom {
        OraclePtr oracle;  // null only for zero-mass padding atoms
        Rational mass;
    };

    static LimitMeasure dirac(OraclePtr oracle);
    static LimitMeasure mu_s(int delta = kDefaultDelta);      // mass 2^{-i} at [S, u_i]
    static LimitMeasure mu_s_bar(int delta = kDefaultDelta);  // mass 2^{-i} at [S-bar, u-bar_i]
    // weights must be positive and sum to 1
    static LimitMeasure mixture(std::vector<std::pair<Rational, LimitMeasure>> components);

    Atom atom(long k) const { return atom_(k); }
    long atom_count() const { return atom_count_; }  // -1 = infinite
    Rational tail_bound(long k) const { return tail_bound_(k); }

private:
    LimitMeasure(std::function<Atom(long)> atom, long count,
                 std::function<Rational(long)> tail)
        : atom_(std::move(atom)), atom_count_(count), tail_bound_(std::move(tail)) {}

    std::function<Atom(long)> atom_;
    long atom_count_;
    std::function<Rational(long)> tail_bound_;
};

// Exact frequencies of canonical radius-r ball keys.
struct BallDistribution {
    int radius = 0;
    std::map<ClassKey, Rational> freq;
};

// Pushforward of the law of X to radius-r ball types.
BallDistribution ball_distribution(const Graph& X, int r);

struct TruncatedDistribution {
    BallDistribution dist;  // exact on the included atoms; sums to 1 - slack
    Rational slack;         // certified bound on the omitted mass
};

TruncatedDistribution limit_ball_distribution(const LimitMeasure& m, int r, const Rational& eps);

struct RationalInterval {
    Rational lo, hi;
};

// Interval of width <= 2 * f.bound * eps containing the integral of f.
RationalInterval integrate_limit(const LocalFunction& f, const LimitMeasure& m,
                                 const Rational& eps);

// Total variation (1/2) sum |p - q| between two exact distributions.
Rational tv_distance(const BallDistribution& p, const BallDistribution& q);

// Upper bound on TV(p, true limit distribution) given a truncation of the limit.
Rational tv_upper_bound(const BallDistribution& p, const TruncatedDistribution& q);

struct ConvergenceRow {
    int n = 0;
    Rational tv;  // upper bound including truncation slack
};

std::vector<ConvergenceRow> convergence_report(const std::function<Graph(int)>& family,
                                               const LimitMeasure& target, int r,
                                               const std::vector<int>& ns,
                                               const Rational& eps);

// | integral of f against law(X) - integral against law(X \ G) |, exact.
Rational negligence_delta(const Graph& X, const std::vector<Vertex>& G, const LocalFunction& f);

// Largest r with x outside the r-neighborhood of G (so the r-balls about x in X
// and X \ G coincide); nullopt = unbounded (G empty or in another component).
std::optional<int> ball_agreement_radius(const Graph& X, const std::vector<Vertex>& G, Vertex x);

Rational average_degree(const Graph& X);

}  // namespace unimod

#endif
