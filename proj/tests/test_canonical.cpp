#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "unimod/canonical.hpp"
#include "unimod/families.hpp"
#include "unimod/graph.hpp"

using namespace unimod;

TEST_CASE("rooted keys separate exactly the rooted isomorphism classes") {
    testor::Rng rng(21);
    for (int t = 0; t < 150; ++t) {
        Graph A = testor::random_graph(rng, 7);
        Graph B = testor::random_graph(rng, 7);
        RootedGraph RA{A, testor::rand_int(rng, 0, A.vertex_count() - 1)};
        RootedGraph RB{B, testor::rand_int(rng, 0, B.vertex_count() - 1)};
        bool same_key = canonical_rooted(RA) == canonical_rooted(RB);
        // the key only sees the root's component
        RootedGraph CA = component(A, RA.root), CB = component(B, RB.root);
        CHECK(same_key == testor::brute_rooted_iso(CA, CB));
    }
}

TEST_CASE("graph keys match brute-force isomorphism") {
    testor::Rng rng(22);
    for (int t = 0; t < 100; ++t) {
        Graph A = testor::random_graph(rng, 7);
        Graph B = testor::random_graph(rng, 7);
        CHECK((canonical_graph_key(A) == canonical_graph_key(B)) ==
              testor::brute_graph_iso(A, B));
    }
}

TEST_CASE("orbits match exhaustive permutation search") {
    auto sorted = [](std::vector<std::vector<Vertex>> cells) {
        std::sort(cells.begin(), cells.end());
        return cells;
    };
    testor::Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        Graph X = testor::random_connected_graph(rng, 12);
        CHECK(sorted(automorphism_orbits(X)) == testor::brute_orbits(X));
    }
    // a few structured hosts
    for (const Graph& X : {star(4), cycle(8), complete(5), t_ball(3).graph})
        CHECK(sorted(automorphism_orbits(X)) == testor::brute_orbits(X));
}

TEST_CASE("orbit partition refines the degree partition") {
    testor::Rng rng(24);
    for (int t = 0; t < 100; ++t) {
        Graph X = testor::random_graph(rng, 12);
        for (const auto& cell : automorphism_orbits(X))
            for (Vertex v : cell) CHECK(X.degree(v) == X.degree(cell[0]));
    }
}

TEST_CASE("rho is an ultrametric") {
    CHECK(rho({path(1), 0}, {path(2), 0}) == 1);
    CHECK(rho({cycle(8), 0}, {path(9), 4}) == Rational(1, 8));
    CHECK(rho({cycle(5), 0}, {cycle(5), 3}) == 0);
    testor::Rng rng(25);
    for (int t = 0; t < 1000; ++t) {
        Graph GA = testor::random_graph(rng, 14);
        Graph GB = testor::random_graph(rng, 14);
        Graph GC = testor::random_graph(rng, 14);
        RootedGraph A{GA, testor::rand_int(rng, 0, GA.vertex_count() - 1)};
        RootedGraph B{GB, testor::rand_int(rng, 0, GB.vertex_count() - 1)};
        RootedGraph C{GC, testor::rand_int(rng, 0, GC.vertex_count() - 1)};
        Rational ab = rho(A, B), bc = rho(B, C), ac = rho(A, C);
        CHECK(ac <= std::max(ab, bc));
    }
}

TEST_CASE("orbit/neighborhood ratio identity") {
    // |Gx| * |Gy n N(x)| = |Gy| * |Gx n N(y)| for adjacent x, y
    testor::Rng rng(26);
    for (int t = 0; t < 300; ++t) {
        Graph X = testor::random_connected_graph(rng, 12);
        HostClasses hc = host_classes(X);
        for (auto [x, y] : X.edge_list()) {
            long gx = static_cast<long>(hc.orbit[hc.orbit_of[x]].size());
            long gy = static_cast<long>(hc.orbit[hc.orbit_of[y]].size());
            auto count_in = [&](Vertex v, int orb) {
                long c = 0;
                for (Vertex w : X.neighbors(v))
                    if (hc.orbit_of[w] == orb) ++c;
                return c;
            };
            CHECK(gx * count_in(x, hc.orbit_of[y]) == gy * count_in(y, hc.orbit_of[x]));
        }
    }
}

TEST_CASE("stabilizer orbit counts") {
    Graph S = star(3);
    CHECK(stabilizer_orbit_count(S, 0, 1) == 3);  // center sees one orbit of leaves
    CHECK(stabilizer_orbit_count(S, 1, 0) == 1);
    Graph Z = cycle(6);
    CHECK(stabilizer_orbit_count(Z, 0, 1) == 2);  // both neighbors equivalent
}

TEST_CASE("birooted keys track the ordered root pair") {
    Graph P = path(3);
    CHECK(canonical_birooted({P, 0, 1}) != canonical_birooted({P, 1, 0}));
    Graph K = path(2);
    CHECK(canonical_birooted({K, 0, 1}) == canonical_birooted({K, 1, 0}));
    CHECK_THROWS_AS(canonical_birooted({P, 0, 2}), InvalidInput);  // not adjacent
}

TEST_CASE("host classes are sorted by key and index all vertices") {
    testor::Rng rng(27);
    for (int t = 0; t < 60; ++t) {
        Graph X = testor::random_graph(rng, 10);
        HostClasses hc = host_classes(X);
        CHECK(std::is_sorted(hc.key.begin(), hc.key.end()));
        for (int k = 0; k < hc.count(); ++k) {
            CHECK(hc.index_of.at(hc.key[k]) == k);
            for (Vertex v : hc.orbit[k]) {
                CHECK(hc.orbit_of[v] == k);
                CHECK(canonical_rooted({X, v}) == hc.key[k]);
            }
        }
    }
}
