#ifndef UNIMOD_CANONICAL_HPP
#define UNIMOD_CANONICAL_HPP

#include <map>
#include <string>
#include <vector>

#include "unimod/graph.hpp"
#include "unimod/rational.hpp"

namespace unimod {

// Canonical class keys are byte strings with a versioned prefix ("v1R:", "v1B:",
// "v1U:").  Equal keys <=> isomorphic (rooted / birooted / plain).  Stable within
// one release only; not a cross-version wire format.
using ClassKey = std::string;

struct CanonicalOptions {
    long node_budget = 10'000'000;  // search nodes before ResourceLimit
};

// Key of the rooted isomorphism class [X_x, x].  Only the root's component matters.
ClassKey canonical_rooted(const RootedGraph& R, const CanonicalOptions& opt = {});

// Key of the birooted class [X_x, x, y]; coroot must be a neighbor of the root.
ClassKey canonical_birooted(const BirootedGraph& B, const CanonicalOptions& opt = {});

// Key of the plain (unrooted) isomorphism class of X, components included.
ClassKey canonical_graph_key(const Graph& X, const CanonicalOptions& opt = {});

// The ultrametric: 0 if rooted-isomorphic, else 2^{-r} with r the largest s such
// that the radius-s balls about the roots are rooted-isomorphic.
Rational rho(const RootedGraph& A, const RootedGraph& B);

// The rooted connected-component classes of a host graph: per-vertex orbit ids,
// orbit membership, and one canonical key per orbit (orbits sorted by key bytes).
struct HostClasses {
    std::vector<int> orbit_of;               // vertex -> orbit index
    std::vector<std::vector<Vertex>> orbit;  // orbit index -> sorted members
    std::vector<ClassKey> key;               // orbit index -> canonical key
    std::map<ClassKey, int> index_of;

    int count() const { return static_cast<int>(orbit.size()); }
    Vertex rep(int k) const { return orbit[k][0]; }
};

HostClasses host_classes(const Graph& X, const CanonicalOptions& opt = {});

// Orbits of Aut(X) acting on V(X): x, y share a cell iff their rooted components
// are isomorphic.
std::vector<std::vector<Vertex>> automorphism_orbits(const Graph& X,
                                                     const CanonicalOptions& opt = {});

// |G_a b|: the number of neighbors y of a with [X,a,y] = [X,a,b].
int stabilizer_orbit_count(const Graph& X, Vertex a, Vertex b,
                           const CanonicalOptions& opt = {});

}  // namespace unimod

#endif
