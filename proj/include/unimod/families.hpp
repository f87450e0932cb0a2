#ifndef UNIMOD_FAMILIES_HPP
#define UNIMOD_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "unimod/graph.hpp"

namespace unimod {

// Deterministic generators for every graph family used in the analysis.
// All of them respect the given degree cap and are relabeling-stable.

Graph cycle(int n, int delta = kDefaultDelta);     // Z_n, n >= 3
Graph path(int n, int delta = kDefaultDelta);      // P_n, n >= 1
Graph complete(int n, int delta = kDefaultDelta);  // K_n
Graph star(int leaves, int delta = kDefaultDelta); // K_{1,leaves}

// T_n: radius-n ball of the 3-regular tree, rooted at the center t.
// |V| = 3*2^n - 2.
RootedGraph t_ball(int n, int delta = kDefaultDelta);

// Lambda_n: perfect binary tree of depth n rooted at its first ancestor.
// |V| = 2^{n+1} - 1.
RootedGraph lambda_ball(int n, int delta = kDefaultDelta);

// barred Lambda_n: as lambda_ball but each sibling pair is joined by a bar.
// |V| = 2^{n+1} - 1.
RootedGraph barred_lambda_ball(int n, int delta = kDefaultDelta);

// Radius-r ball of the (3,4)-biregular tree, rooted at a degree-3 vertex.
RootedGraph t34_ball(int r, int delta = kDefaultDelta);

// Radius-r ball of the (3,2,4)-triregular tree (u-w-v pattern: deg u = 3,
// deg w = 2, deg v = 4), rooted at a u-vertex.
RootedGraph t324_ball(int r, int delta = kDefaultDelta);

// T_n attached to the cycle Z_{2n+1} by a path on three vertices
// (t - bridge - cycle vertex).  |V| = 3*2^n + 2n.
Graph tree_plus_cycle(int n, int delta = kDefaultDelta);

// (k_n, l_n) of the average-degree counterexample recursion:
// k_1 = 1, l_1 = 2, k_n = 15*sum_{i<n}(l_i - k_i) - 2, l_n = ceil(7k_n/6 + 1/3).
std::pair<std::int64_t, std::int64_t> counterexample_indices(int n);

// X_m = B_X(1, m) of the decorated ray: path 1..m+1 with a K_6 identified at
// every decorated vertex j <= m (j decorated iff k_i <= j <= l_i - 1 for some i).
Graph counterexample_ball(std::int64_t m, int delta = kDefaultDelta);

// The two joined-tree sequences: X_n = (binary tree of depth n rooted at x)
// joined to (barred tree of depth n-1 rooted at y) by the edge {x,y};
// Y_n = (binary tree of depth n-1 rooted at x) joined to (barred tree of
// depth n rooted at y).  X_n is rooted at x, Y_n at y.  |V| = 3*2^n - 2, n >= 2.
std::pair<RootedGraph, RootedGraph> joined_tree_balls(int n, int delta = kDefaultDelta);

// Cayley graph from an explicit multiplication table (row-major: table[g][h] =
// g*h) and a generator set, which must be identity-free, symmetric (closed
// under inverse), and generating (connected result).
Graph cayley(const std::vector<std::vector<int>>& table, const std::vector<int>& gens,
             int delta = kDefaultDelta);

// Named family dispatch, mirroring the JSON family spec.
struct FamilySpec {
    std::string family;
    std::int64_t n = 0;                           // main parameter (n, r, or m)
    std::vector<std::vector<int>> table;          // cayley only
    std::vector<int> gens;                        // cayley only
    int delta = kDefaultDelta;
};

struct Generated {
    Graph graph;
    std::optional<Vertex> root;
};

Generated generate(const FamilySpec& spec);

}  // namespace unimod

#endif
