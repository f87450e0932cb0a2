#ifndef UNIMOD_GRAPH_HPP
#define UNIMOD_GRAPH_HPP

#include <utility>
#include <vector>

#include "unimod/errors.hpp"

namespace unimod {

using Vertex = int;

inline constexpr int kDefaultDelta = 8;

// Finite simple undirected graph with a degree cap Delta.
// Immutable after construction; vertices are 0..n-1.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
          int delta_cap = kDefaultDelta);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    int delta_cap() const { return delta_cap_; }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool has_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }
    // Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edge_list() const;

private:
    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
    int delta_cap_;
};

struct RootedGraph {
    Graph graph;
    Vertex root;
};

struct BirootedGraph {
    Graph graph;
    Vertex root;
    Vertex coroot;  // must be a neighbor of root
};

// BFS distances from x; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& X, Vertex x);

// Induced subgraph on `keep` (which must be nonempty); vertices are relabeled
// 0..k-1 in the order given.  old_of[i] = keep[i] lets callers map back.
Graph induced_subgraph(const Graph& X, const std::vector<Vertex>& keep);

// Closed ball of radius r about x in the component of x, rooted at x (vertex 0).
RootedGraph ball(const Graph& X, Vertex x, int r);

// Connected component containing x, rooted at x (vertex 0).
RootedGraph component(const Graph& X, Vertex x);

// Vertex sets of the connected components, each sorted, ordered by least vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& X);

bool is_connected(const Graph& X);
bool is_forest(const Graph& X);

// Disjoint union of the parts, each repeated its multiplicity.
Graph disjoint_union(const std::vector<std::pair<Graph, int>>& parts);

// Induced subgraph on V(X) \ G.  G must be a proper subset of V(X).
Graph delete_subgraph(const Graph& X, const std::vector<Vertex>& G);

// {x : d(x, G) <= r}, sorted.
std::vector<Vertex> r_neighborhood(const Graph& X, const std::vector<Vertex>& G, int r);

}  // namespace unimod

#endif
