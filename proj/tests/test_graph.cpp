#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "unimod/families.hpp"
#include "unimod/graph.hpp"

using namespace unimod;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(0, {}), InvalidInput);
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidInput);                // loop
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InvalidInput);        // duplicate
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidInput);                // out of range
    CHECK_THROWS_AS(Graph(4, {{0, 1}, {0, 2}, {0, 3}}, 2), InvalidInput);  // cap
    Graph X(3, {{0, 1}, {2, 1}});
    CHECK(X.vertex_count() == 3);
    CHECK(X.edge_count() == 2);
    CHECK(X.degree(1) == 2);
    CHECK(X.adjacent(1, 2));
    CHECK(!X.adjacent(0, 2));
    CHECK(X.edge_list() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});
}

TEST_CASE("bfs, balls and components") {
    Graph P = path(5);
    auto d = bfs_distances(P, 0);
    CHECK(d == std::vector<int>{0, 1, 2, 3, 4});
    RootedGraph B = ball(P, 2, 1);
    CHECK(B.graph.vertex_count() == 3);
    CHECK(B.root == 0);

    Graph U = disjoint_union({{path(2), 1}, {cycle(3), 1}});
    auto cc = connected_components(U);
    REQUIRE(cc.size() == 2);
    CHECK(cc[0] == std::vector<Vertex>{0, 1});
    CHECK(cc[1] == std::vector<Vertex>{2, 3, 4});
    CHECK(!is_connected(U));
    CHECK(is_connected(cycle(4)));
    CHECK(is_forest(path(7)));
    CHECK(!is_forest(cycle(3)));
}

TEST_CASE("ball nesting and diameter recovery") {
    testor::Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        Graph X = testor::random_connected_graph(rng, 10);
        Vertex x = testor::rand_int(rng, 0, X.vertex_count() - 1);
        int prev = 0;
        for (int r = 0; r <= X.vertex_count(); ++r) {
            int now = ball(X, x, r).graph.vertex_count();
            CHECK(now >= prev);  // balls are nested
            prev = now;
        }
        CHECK(prev == X.vertex_count());  // radius >= diameter recovers X
    }
}

TEST_CASE("delete_subgraph partitions the remaining vertices") {
    testor::Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        Graph X = testor::random_graph(rng, 12);
        if (X.vertex_count() < 2) continue;
        std::set<Vertex> del{testor::rand_int(rng, 0, X.vertex_count() - 1)};
        std::vector<Vertex> G(del.begin(), del.end());
        Graph Y = delete_subgraph(X, G);
        CHECK(Y.vertex_count() == X.vertex_count() - static_cast<int>(G.size()));
        size_t covered = 0;
        for (const auto& cell : connected_components(Y)) covered += cell.size();
        CHECK(covered == static_cast<size_t>(Y.vertex_count()));
    }
}

TEST_CASE("r_neighborhood growth bound") {
    // |N_X(G, r)| <= (Delta + 1)^r * |G| on 500 random instances
    testor::Rng rng(13);
    for (int t = 0; t < 500; ++t) {
        Graph X = testor::random_graph(rng, 40, 6);
        int r = testor::rand_int(rng, 0, 3);
        std::vector<Vertex> G{testor::rand_int(rng, 0, X.vertex_count() - 1)};
        long bound = 1;
        for (int i = 0; i < r; ++i) bound *= 7;
        CHECK(static_cast<long>(r_neighborhood(X, G, r).size()) <=
              bound * static_cast<long>(G.size()));
    }
}
