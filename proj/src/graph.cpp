#include "unimod/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace unimod {

Graph::Graph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges, int delta_cap)
    : delta_cap_(delta_cap) {
    if (vertex_count <= 0) throw InvalidInput("graph must have at least one vertex");
    if (delta_cap <= 0) throw InvalidInput("degree cap must be positive");
    adj_.resize(vertex_count);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw InvalidInput("edge endpoint out of range");
        if (u == v) throw InvalidInput("self-loop on vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (Vertex v = 0; v < vertex_count; ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw InvalidInput("duplicate edge at vertex " + std::to_string(v));
        if (static_cast<int>(nb.size()) > delta_cap_)
            throw InvalidInput("degree of vertex " + std::to_string(v) + " exceeds cap " +
                               std::to_string(delta_cap_));
    }
    edge_count_ = static_cast<int>(edges.size());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    if (!has_vertex(v)) throw InvalidInput("unknown vertex id " + std::to_string(v));
    return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances(const Graph& X, Vertex x) {
    if (!X.has_vertex(x)) throw InvalidInput("unknown vertex id " + std::to_string(x));
    std::vector<int> dist(X.vertex_count(), -1);
    std::deque<Vertex> queue{x};
    dist[x] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : X.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

Graph induced_subgraph(const Graph& X, const std::vector<Vertex>& keep) {
    if (keep.empty()) throw InvalidInput("induced subgraph on empty vertex set");
    std::vector<int> new_id(X.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        if (!X.has_vertex(keep[i])) throw InvalidInput("unknown vertex id");
        if (new_id[keep[i]] >= 0) throw InvalidInput("duplicate vertex in set");
        new_id[keep[i]] = i;
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u : keep)
        for (Vertex v : X.neighbors(u))
            if (u < v && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
    return Graph(static_cast<int>(keep.size()), std::move(edges), X.delta_cap());
}

RootedGraph ball(const Graph& X, Vertex x, int r) {
    if (r < 0) throw InvalidInput("negative radius");
    auto dist = bfs_distances(X, x);
    std::vector<Vertex> keep{x};
    for (Vertex v = 0; v < X.vertex_count(); ++v)
        if (v != x && dist[v] >= 0 && dist[v] <= r) keep.push_back(v);
    return {induced_subgraph(X, keep), 0};
}

RootedGraph component(const Graph& X, Vertex x) {
    auto dist = bfs_distances(X, x);
    std::vector<Vertex> keep{x};
    for (Vertex v = 0; v < X.vertex_count(); ++v)
        if (v != x && dist[v] >= 0) keep.push_back(v);
    return {induced_subgraph(X, keep), 0};
}

std::vector<std::vector<Vertex>> connected_components(const Graph& X) {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(X.vertex_count(), 0);
    for (Vertex s = 0; s < X.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> cell{s};
        seen[s] = 1;
        for (size_t i = 0; i < cell.size(); ++i)
            for (Vertex w : X.neighbors(cell[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    cell.push_back(w);
                }
        std::sort(cell.begin(), cell.end());
        out.push_back(std::move(cell));
    }
    return out;
}

bool is_connected(const Graph& X) {
    auto dist = bfs_distances(X, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_forest(const Graph& X) {
    int comps = static_cast<int>(connected_components(X).size());
    return X.edge_count() == X.vertex_count() - comps;
}

Graph disjoint_union(const std::vector<std::pair<Graph, int>>& parts) {
    if (parts.empty()) throw InvalidInput("disjoint union of nothing");
    int total = 0;
    int delta = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& [g, mult] : parts) {
        if (mult < 1) throw InvalidInput("multiplicity must be >= 1");
        delta = std::max(delta, g.delta_cap());
        for (int copy = 0; copy < mult; ++copy) {
            for (auto [u, v] : g.edge_list()) edges.emplace_back(total + u, total + v);
            total += g.vertex_count();
        }
    }
    return Graph(total, std::move(edges), delta);
}

Graph delete_subgraph(const Graph& X, const std::vector<Vertex>& G) {
    std::vector<char> drop(X.vertex_count(), 0);
    for (Vertex v : G) {
        if (!X.has_vertex(v)) throw InvalidInput("unknown vertex id");
        drop[v] = 1;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < X.vertex_count(); ++v)
        if (!drop[v]) keep.push_back(v);
    if (keep.empty()) throw InvalidInput("cannot delete every vertex");
    return induced_subgraph(X, keep);
}

std::vector<Vertex> r_neighborhood(const Graph& X, const std::vector<Vertex>& G, int r) {
    if (G.empty()) throw InvalidInput("empty vertex set");
    if (r < 0) throw InvalidInput("negative radius");
    std::vector<int> dist(X.vertex_count(), -1);
    std::deque<Vertex> queue;
    for (Vertex v : G) {
        if (!X.has_vertex(v)) throw InvalidInput("unknown vertex id");
        if (dist[v] < 0) {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (dist[v] == r) continue;
        for (Vertex w : X.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < X.vertex_count(); ++v)
        if (dist[v] >= 0) out.push_back(v);
    return out;
}

}  // namespace unimod
