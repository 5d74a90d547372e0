#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "conflict.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "rng.hpp"
#include "test_oracles.hpp"

using namespace sc;

TEST_CASE("edge-list parsing builds the triangle") {
    Graph g = parse_graph("0 1\n1 2\n2 0\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.has_edge(0, 2));
}

TEST_CASE("self-loop is rejected with its line number") {
    CHECK_THROWS_WITH_AS(parse_graph("0 0\n"), doctest::Contains("line 1"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_graph("0 1\n2 2\n"), doctest::Contains("line 2"),
                         std::runtime_error);
}

TEST_CASE("malformed tokens are rejected") {
    CHECK_THROWS_AS(parse_graph("0\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph("0 1 2\n"), std::runtime_error);
}

TEST_CASE("duplicate edges are deduplicated and ids compacted") {
    Graph g = parse_graph("# comment\n5 9\n9 5\n5 7\n");
    CHECK(g.num_vertices() == 3);  // {5,7,9} -> {0,1,2}
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(0, 1));
}

TEST_CASE("DIMACS parsing gives P_4 with 1-based ids converted") {
    Graph g = parse_graph("c path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    std::multiset<size_t> degs;
    for (Vertex v = 0; v < 4; ++v) degs.insert(g.degree(v));
    CHECK(degs == std::multiset<size_t>{1, 1, 2, 2});
}

TEST_CASE("vertex rings") {
    Graph p4 = parse_graph("0 1\n1 2\n2 3\n");
    CHECK(p4.vertex_ring(0, 2) == std::vector<Vertex>{2});
    Graph c6 = gen_cycle(6);
    CHECK(c6.vertex_ring(0, 3) == std::vector<Vertex>{3});
    CHECK(c6.vertex_ring(0, 0) == std::vector<Vertex>{0});
    // Rings for distinct i are disjoint and cover the component.
    std::set<Vertex> seen;
    for (int i = 0; i <= 3; ++i)
        for (Vertex v : c6.vertex_ring(0, i)) CHECK(seen.insert(v).second);
    CHECK(seen.size() == 6);
}

TEST_CASE("edge rings on C_6, K_3 and the star") {
    Graph c6 = gen_cycle(6);
    auto ring = [&](Vertex v, int i) {
        std::set<std::pair<Vertex, Vertex>> out;
        for (EdgeId e : c6.edge_ring(v, i)) out.insert(c6.edge(e));
        return out;
    };
    CHECK(ring(0, 1) == std::set<std::pair<Vertex, Vertex>>{{0, 1}, {0, 5}});
    CHECK(ring(0, 2) == std::set<std::pair<Vertex, Vertex>>{{1, 2}, {4, 5}});
    CHECK(ring(0, 3) == std::set<std::pair<Vertex, Vertex>>{{2, 3}, {3, 4}});

    Graph k3 = gen_cycle(3);
    CHECK(k3.edge_ring(0, 2).size() == 1);
    CHECK(k3.edge(k3.edge_ring(0, 2)[0]) == std::pair<Vertex, Vertex>{1, 2});
    CHECK(k3.edge_ring(0, 3).empty());

    Graph star = gen_complete_bipartite(1, 4);  // center 0, leaves 1..4
    CHECK(star.edge_ring(1, 2).size() == 3);
    CHECK(star.edge_ring(1, 3).empty());
}

TEST_CASE("edge rings partition the reachable edge set (inductive oracle)") {
    // Independent route: build rings by the inductive definition and compare.
    rng::Stream stream(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = gen_random_regular(24, 3, trial);
        for (Vertex v = 0; v < 4; ++v) {
            std::set<EdgeId> assigned;
            std::vector<std::set<EdgeId>> rings;
            // E_1: incident to v.
            std::set<EdgeId> cur(g.incident_edges(v).begin(), g.incident_edges(v).end());
            while (!cur.empty()) {
                rings.push_back(cur);
                for (EdgeId e : cur) assigned.insert(e);
                std::set<EdgeId> next;
                for (EdgeId e : cur) {
                    auto [a, b] = g.edge(e);
                    for (Vertex x : {a, b})
                        for (EdgeId f : g.incident_edges(x))
                            if (!assigned.count(f)) next.insert(f);
                }
                cur = next;
            }
            for (size_t i = 0; i < rings.size(); ++i) {
                auto got = g.edge_ring(v, static_cast<int>(i) + 1);
                CHECK(std::set<EdgeId>(got.begin(), got.end()) == rings[i]);
            }
            CHECK(g.edge_ring(v, static_cast<int>(rings.size()) + 1).empty());
        }
    }
}

TEST_CASE("codegree examples and symmetry") {
    Graph k23 = gen_complete_bipartite(2, 3);
    CHECK(k23.codegree(0, 1) == 3);
    Graph c6 = gen_cycle(6);
    CHECK(c6.codegree(0, 2) == 1);
    Graph two = parse_graph("0 1\n2 3\n");
    CHECK(two.codegree(0, 2) == 0);
    CHECK_THROWS_AS(c6.codegree(1, 1), std::invalid_argument);
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = u + 1; v < 6; ++v) CHECK(c6.codegree(u, v) == c6.codegree(v, u));
}

TEST_CASE("conflict graph of C_5 at t=2 is complete") {
    Graph c5 = gen_cycle(5);
    ConflictGraph cg = conflict_graph(c5, 2);
    CHECK(cg.num_vertices() == 5);
    for (const auto& row : cg.adj) CHECK(row.size() == 4);
    CHECK(cg.max_degree == 4);
}

TEST_CASE("conflict graph of C_6 at t=2 misses only the antipode") {
    Graph c6 = gen_cycle(6);
    ConflictGraph cg = conflict_graph(c6, 2);
    for (const auto& row : cg.adj) CHECK(row.size() == 4);
    // Antipodal pairs are non-adjacent.
    EdgeId e01 = static_cast<EdgeId>(c6.edge_id(0, 1));
    EdgeId e34 = static_cast<EdgeId>(c6.edge_id(3, 4));
    CHECK(!cg.adjacent(e01, e34));
}

TEST_CASE("conflict graph of P_4 at t=2 is a triangle; t < 2 rejected") {
    Graph p4 = parse_graph("0 1\n1 2\n2 3\n");
    ConflictGraph cg = conflict_graph(p4, 2);
    for (const auto& row : cg.adj) CHECK(row.size() == 2);
    CHECK_THROWS_AS(conflict_graph(p4, 1), std::invalid_argument);
}

TEST_CASE("conflict adjacency matches the pairwise-distance definition") {
    // Random small instances, t in {2,3,4}; brute-force over all edge pairs.
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = trial % 3 == 0 ? gen_random_regular(20, 3, trial)
                                 : (trial % 3 == 1 ? gen_random_regular(16, 4, trial)
                                                   : gen_high_girth_regular(30, 3, 5, trial).graph);
        REQUIRE(g.num_edges() <= 200);
        auto dist = oracle_support::all_pairs_distances(g);
        for (int t = 2; t <= 4; ++t) {
            ConflictGraph cg = conflict_graph(g, t);
            for (EdgeId e = 0; e < g.num_edges(); ++e) {
                // Symmetry and irreflexivity.
                CHECK(!cg.adjacent(e, e));
                for (EdgeId f = 0; f < g.num_edges(); ++f) {
                    if (e == f) continue;
                    bool expect = oracle_support::brute_conflict_adjacent(dist, g.edge(e),
                                                                          g.edge(f), t);
                    CHECK(cg.adjacent(e, f) == expect);
                    CHECK(cg.adjacent(f, e) == expect);
                }
            }
            // Degree bounds: 2d(d-1) at t=2 (tight), 2d^t in general.
            double d = static_cast<double>(g.max_degree());
            if (t == 2) CHECK(static_cast<double>(cg.max_degree) <= 2.0 * d * (d - 1.0));
            CHECK(static_cast<double>(cg.max_degree) <= 2.0 * std::pow(d, t));
        }
    }
}

TEST_CASE("verify_coloring accepts the alternating C_6 coloring") {
    Graph c6 = gen_cycle(6);
    ConflictGraph cg = conflict_graph(c6, 2);
    // Edge ids in lexicographic order: (0,1),(0,5),(1,2),(2,3),(3,4),(4,5).
    // Around the cycle: (0,1),(1,2),(2,3),(3,4),(4,5),(0,5).
    Coloring phi(6, -1);
    int next = 0;
    for (int k = 0; k < 6; ++k) {
        Vertex u = k, v = (k + 1) % 6;
        phi[c6.edge_id(u, v)] = next;
        next = (next + 1) % 3;
    }
    ColoringReport rep = verify_coloring(cg, phi);
    CHECK(rep.valid);
    CHECK(rep.colors_used == 3);
}

TEST_CASE("no 4-coloring of C_5's edges is strong") {
    Graph c5 = gen_cycle(5);
    ConflictGraph cg = conflict_graph(c5, 2);
    // Exhaust all assignments of 4 colors to 5 edges.
    for (int mask = 0; mask < 1024; ++mask) {
        Coloring phi(5);
        int x = mask;
        for (int e = 0; e < 5; ++e) {
            phi[e] = x % 4;
            x /= 4;
        }
        CHECK(!verify_coloring(cg, phi).valid);
    }
}

TEST_CASE("empty coloring is vacuously valid; palette violations flagged") {
    Graph c6 = gen_cycle(6);
    ConflictGraph cg = conflict_graph(c6, 2);
    Coloring empty(6, -1);
    CHECK(verify_coloring(cg, empty).valid);
    Coloring one(6, -1);
    one[0] = 7;
    ColoringReport rep = verify_coloring(cg, one, 3);
    CHECK(rep.palette_violation);
}

TEST_CASE("dual-route verification agrees on random partial colorings") {
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = gen_random_regular(14, 3, 100 + trial);
        for (int t = 2; t <= 3; ++t) {
            ConflictGraph cg = conflict_graph(g, t);
            rng::Stream stream(rng::key(5, trial, t));
            Coloring phi(cg.num_vertices(), -1);
            for (size_t v = 0; v < phi.size(); ++v)
                if (stream.unit() < 0.7) phi[v] = static_cast<int>(stream.below(6));
            // verify_coloring throws if the two routes ever disagree.
            ColoringReport rep = verify_coloring(cg, phi);
            ColoringReport plain = verify_coloring(cg.adj, phi);
            CHECK(rep.valid == plain.valid);
        }
    }
}

TEST_CASE("disconnected inputs are allowed and rings stay in components") {
    Graph g = parse_graph("0 1\n1 2\n3 4\n");
    CHECK(g.num_vertices() == 5);
    CHECK(g.edge_ring(0, 1).size() == 1);
    CHECK(g.edge_ring(0, 2).size() == 1);
    CHECK(g.edge_ring(0, 3).empty());  // other component is unreachable
    ConflictGraph cg = conflict_graph(g, 2);
    CHECK(cg.adj[2].empty());  // edge {3,4} conflicts with nothing
}

TEST_CASE("graph construction is deterministic and canonical") {
    Graph a = parse_graph("2 1\n0 1\n");
    Graph b = parse_graph("0 1\n1 2\n");
    CHECK(a.to_edge_list() == b.to_edge_list());
}
