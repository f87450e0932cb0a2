#ifndef UNIMOD_MEASURES_HPP
#define UNIMOD_MEASURES_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unimod/canonical.hpp"
#include "unimod/graph.hpp"
#include "unimod/rational.hpp"

namespace unimod {

// Exact probability mass function on the rooted connected-component classes of
// a finite host graph.  Class indexing matches HostClasses (sorted by key).
class SustainedMeasure {
public:
    SustainedMeasure(Graph host, std::vector<Rational> mass_per_class);

    const Graph& host() const { return host_; }
    const HostClasses& classes() const { return classes_; }
    const std::vector<Rational>& mass() const { return mass_; }
    const Rational& mass_at(int k) const { return mass_.at(k); }
    const Rational& mass_of_vertex(Vertex v) const { return mass_.at(classes_.orbit_of.at(v)); }
    bool strictly_sustained() const;

private:
    Graph host_;
    HostClasses classes_;
    std::vector<Rational> mass_;
};

// Measure given as {representative vertex -> mass}; every class must be named
// exactly once via some representative.
SustainedMeasure measure_from_vertex_masses(const Graph& host,
                                            const std::vector<std::pair<Vertex, Rational>>& mass);

// The law Psi(X): each class weighted by its orbit fraction |Aut(X)x| / |V(X)|.
SustainedMeasure law(const Graph& X);

// Bounded continuous function on the rooted-class space: the value depends only
// on the radius-r ball about the root.
class LocalFunction {
public:
    static LocalFunction degree(int delta = kDefaultDelta);
    static LocalFunction constant(const Rational& c);
    // 1 if the canonical radius-r ball key is in `keys`, else 0
    static LocalFunction indicator(std::vector<ClassKey> keys, int radius);
    static LocalFunction from_table(int radius, std::map<ClassKey, Rational> table,
                                    Rational default_value);

    int radius() const { return radius_; }
    const Rational& bound() const { return bound_; }
    Rational operator()(const Graph& X, Vertex x) const;
    Rational eval_ball(const RootedGraph& ball_r) const;  // ball of exactly radius()

private:
    LocalFunction(int radius, Rational bound,
                  std::function<Rational(const RootedGraph&)> eval)
        : radius_(radius), bound_(std::move(bound)), eval_(std::move(eval)) {}

    int radius_;
    Rational bound_;
    std::function<Rational(const RootedGraph&)> eval_;
};

Rational integrate(const LocalFunction& f, const SustainedMeasure& m);

// Nonnegative weight on birooted classes, keyed by the canonical birooted
// radius-r ball about the root (radius >= 1 so the coroot is inside).
struct BirootedWeight {
    int radius = 1;
    std::map<ClassKey, Rational> table;
    Rational default_value = 0;
};

// (sum of f[X,x,y] d-mass, sum of f[X,y,x] d-mass): the two sides of the
// mass-transport identity; equal for every f iff m is unimodular.
std::pair<Rational, Rational> transport_sums(const BirootedWeight& f, const SustainedMeasure& m);

struct UnimodularityWitness {
    ClassKey birooted_class;
    Rational lhs, rhs;
};

struct UnimodularityVerdict {
    bool pass = false;
    std::optional<UnimodularityWitness> witness;
};

// Mass-transport identity tested against the characteristic function of every
// birooted class of the host (which suffices).
UnimodularityVerdict check_unimodular_definitional(const SustainedMeasure& m);

// |G_a b| mu[X,a] = |G_b a| mu[X,b] for all adjacent a, b; host must be connected.
UnimodularityVerdict check_unimodular_criterion(const SustainedMeasure& m);

// The unimodular sustained measures of a finite graph: one uniquely determined
// measure per isomorphism class of connected components; every unimodular
// measure sustained by X is a convex combination of these.
struct SolveResult {
    struct Part {
        Graph component;                 // one representative component
        std::vector<int> host_components;  // indices into connected_components(X)
        SustainedMeasure measure;        // the unique unimodular measure on it
    };
    std::vector<Part> parts;
};

SolveResult solve_unimodular(const Graph& X);

// Psi of a disjoint union from component laws and multiplicities; parts must be
// pairwise non-isomorphic.
SustainedMeasure law_of_disjoint_union(const std::vector<std::pair<Graph, int>>& parts);

// Normalized restriction of m to the component of y; errors with NullComponent
// if that component carries zero mass.
SustainedMeasure restrict_to_component(const SustainedMeasure& m, Vertex y);

// Exact solution of A x = b (A integer, unique solution required), by
// fraction-free Gaussian elimination.
std::vector<Rational> solve_linear_exact(std::vector<std::vector<Integer>> rows,
                                         std::vector<Integer> rhs);

}  // namespace unimod

#endif
