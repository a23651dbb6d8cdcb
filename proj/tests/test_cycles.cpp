#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cyclesat/constructions.hpp"
#include "cyclesat/cycles.hpp"
#include "test_oracles.hpp"

using namespace cyclesat;

TEST_CASE("circumference of the named families") {
    CHECK(circumference(d_graph(2, 2)) == 5);
    CHECK(circumference(h_graph(8, 6, 2)) == 5);
    CHECK(circumference(testoracle::cycle_graph(5)) == 5);
    CHECK(circumference(testoracle::path_graph(6)) == 0);
    CHECK(circumference(Graph::from_edges(1, {})) == 0);
    for (int n = 6; n <= 10; ++n)
        CHECK(circumference(h_graph(n, 6, 2)) == 5);
}

TEST_CASE("circumference agrees with the whole-graph subset-DP oracle") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 4 + trial % 9;  // up to 12
        Graph g = testoracle::random_graph(n, 0.35, rng);
        CHECK(circumference(g) == testoracle::circumference_subset_dp(g));
    }
    // also across the block seam: gluings of small blocks
    Graph glued = Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 0},            // triangle
                                        {2, 3}, {3, 4}, {4, 5}, {5, 2},    // C4 sharing vertex 2
                                        {5, 6}, {6, 7}, {7, 8}, {8, 5}});  // C4 at vertex 5
    CHECK(circumference(glued) == 4);
    CHECK(circumference(glued) == testoracle::circumference_subset_dp(glued));
}

TEST_CASE("has_cycle_at_least") {
    CHECK_FALSE(has_cycle_at_least(isaacs_snark(5), 20));
    CHECK(has_cycle_at_least(complete_graph(6), 6));
    CHECK_FALSE(has_cycle_at_least(testoracle::star_graph(5), 3));
    CHECK_THROWS_AS(has_cycle_at_least(complete_graph(4), 2), std::invalid_argument);

    auto witness = find_cycle_at_least(complete_graph(6), 6);
    REQUIRE(witness.has_value());
    CHECK(witness->size() == 6);
    // witness really is a cycle
    Graph k6 = complete_graph(6);
    for (std::size_t i = 0; i < witness->size(); ++i)
        CHECK(k6.has_edge((*witness)[i], (*witness)[(i + 1) % witness->size()]));
}

TEST_CASE("exists_path_at_least with block routing") {
    Graph d22 = d_graph(2, 2);
    // t3 (=2) to a rim vertex of A (=3): a path of length 5 exists
    PathResult r = exists_path_at_least(d22, 2, 3, 5);
    CHECK(r.found);
    CHECK(r.path.size() >= 6);
    CHECK(r.path.front() == 2);
    CHECK(r.path.back() == 3);
    for (std::size_t i = 0; i + 1 < r.path.size(); ++i)
        CHECK(d22.has_edge(r.path[i], r.path[i + 1]));

    // L=1 with both endpoints in one component is always a yes
    CHECK(exists_path_at_least(d22, 0, 5, 1).found);

    // two leaves of a star only ever see each other at distance 2
    Graph star = testoracle::star_graph(3);
    CHECK_FALSE(exists_path_at_least(star, 1, 2, 3).found);
    CHECK(exists_path_at_least(star, 1, 2, 2).found);

    // distinct components
    Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(exists_path_at_least(two, 0, 2, 1).found);
}

TEST_CASE("exists_path_at_least equals brute force on random graphs") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + trial % 4;
        Graph g = testoracle::random_graph(n, 0.4, rng);
        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % n);
        if (u == v) continue;
        int brute = testoracle::longest_path_brute(g, u, v);
        for (int L = 1; L <= n; ++L)
            CHECK(exists_path_at_least(g, u, v, L).found == (brute >= L));
    }
}

TEST_CASE("path existence is monotone in the threshold") {
    std::mt19937 rng(11);
    Graph g = m6(11);
    for (int trial = 0; trial < 10; ++trial) {
        int u = static_cast<int>(rng() % g.order());
        int v = static_cast<int>(rng() % g.order());
        if (u == v) continue;
        bool prev = true;
        for (int L = 1; L <= g.order(); ++L) {
            bool now = exists_path_at_least(g, u, v, L).found;
            CHECK((prev || !now));  // once false, stays false
            prev = now;
        }
    }
}

TEST_CASE("hamiltonian search") {
    // C6 minus one edge has a hamiltonian path between the detached endpoints
    Graph c6_minus = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(has_hamiltonian_path(c6_minus, 0, 5));
    CHECK_FALSE(has_hamiltonian_path(c6_minus, 0, 3));

    CHECK(has_hamiltonian_path(complete_graph(4), 0, 2));
    CHECK(has_hamiltonian_cycle(complete_graph(4)));
    CHECK_FALSE(has_hamiltonian_cycle(testoracle::path_graph(5)));
    CHECK(has_hamiltonian_cycle(testoracle::cycle_graph(7)));

    // flower snarks are nonhamiltonian
    CHECK_FALSE(has_hamiltonian_cycle(isaacs_snark(5)));
}

TEST_CASE("edge_on_cycle_of_length") {
    Graph k4 = complete_graph(4);
    CHECK(edge_on_cycle_of_length(k4, 0, 1, 3));
    CHECK(edge_on_cycle_of_length(k4, 0, 1, 4));
    Graph c5 = testoracle::cycle_graph(5);
    CHECK(edge_on_cycle_of_length(c5, 0, 1, 5));
    CHECK_FALSE(edge_on_cycle_of_length(c5, 0, 1, 4));
    CHECK_THROWS_AS(edge_on_cycle_of_length(c5, 0, 2, 4), std::invalid_argument);

    // every edge of J_5 lies on a 19-cycle
    Graph j5 = isaacs_snark(5);
    for (auto [u, v] : j5.edges()) CHECK(edge_on_cycle_of_length(j5, u, v, 19));
}

TEST_CASE("witnesses are reproducible") {
    Graph g = m6(13);  // leaves carry labels 8..12
    PathResult a = exists_path_at_least(g, 8, 12, 5);
    PathResult b = exists_path_at_least(g, 8, 12, 5);
    REQUIRE(a.found);
    CHECK(a.path == b.path);
    auto c1 = find_cycle_at_least(d_graph(3, 3), 5);
    auto c2 = find_cycle_at_least(d_graph(3, 3), 5);
    REQUIRE(c1.has_value());
    CHECK(*c1 == *c2);
}

TEST_CASE("cycle decision matches the circumference everywhere") {
    std::mt19937 rng(52);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + trial % 7;
        Graph g = testoracle::random_graph(n, 0.4, rng);
        int circ = circumference(g);
        for (int r = 3; r <= n; ++r) {
            CHECK(has_cycle_at_least(g, r) == (circ >= r));
            auto w = find_cycle_at_least(g, r);
            CHECK(w.has_value() == (circ >= r));
            if (w) {
                CHECK(static_cast<int>(w->size()) >= r);
                for (std::size_t i = 0; i < w->size(); ++i)
                    CHECK(g.has_edge((*w)[i], (*w)[(i + 1) % w->size()]));
            }
        }
    }
}

TEST_CASE("search budget raises an explicit error") {
    SearchLimits tiny{100};
    CHECK_THROWS_AS(circumference(isaacs_snark(7), tiny), ResourceExhausted);
}

TEST_CASE("circumference equals the max over blocks") {
    std::mt19937 rng(400);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = testoracle::random_graph(9, 0.3, rng);
        int per_block = 0;
        for (auto& verts : biconnected_vertex_sets(g)) {
            if (verts.size() < 3) continue;
            std::vector<Edge> edges;
            std::vector<int> local(g.order(), -1);
            for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
            for (auto [u, v] : g.edges())
                if (local[u] >= 0 && local[v] >= 0) edges.push_back({local[u], local[v]});
            Graph blk = Graph::from_edges(static_cast<int>(verts.size()), edges);
            per_block = std::max(per_block, testoracle::circumference_subset_dp(blk));
        }
        CHECK(circumference(g) == per_block);
    }
}
