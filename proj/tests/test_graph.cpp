#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "iso.hpp"

using namespace minev;

namespace {

std::vector<int> degree_multiset(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.n; ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

Graph random_connected(std::mt19937_64& rng, int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(int(rng() % v), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && rng() % 3 == 0) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph primitives") {
    Graph g(4);
    CHECK(g.edge_count() == 0);
    CHECK(!g.connected());
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.component_of(0) == 0b0111);
    CHECK(g.component_of(3) == 0b1000);
    CHECK(!g.connected());
    g.add_edge(2, 3);
    CHECK(g.connected());
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.leaves() == std::vector<int>{0, 3});
    CHECK(g.vertex_mask() == 0b1111);

    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
}

TEST_CASE("induced subgraph reindexes densely") {
    Graph g = build_cycle(5);
    std::vector<int> old_index;
    Graph sub = g.induced(0b10111, &old_index);  // drop vertex 3
    CHECK(sub.n == 4);
    CHECK(old_index == std::vector<int>{0, 1, 2, 4});
    // Surviving edges: 0-1, 1-2, 4-0 -> new labels 0-1, 1-2, 3-0.
    CHECK(sub.edge_count() == 3);
    CHECK(sub.has_edge(0, 1));
    CHECK(sub.has_edge(1, 2));
    CHECK(sub.has_edge(0, 3));
    CHECK(!sub.has_edge(2, 3));
}

TEST_CASE("edge-string parsing and serialization") {
    RootedGraph rg = parse_edges("r0r1");
    CHECK(rg.roots == 0b001);
    CHECK(rg.g.n == 3);
    CHECK(rg.g.degree(0) == 2);
    CHECK(serialize_edges(SingleRootedGraph{rg.g, 0}) == "r0r1");

    RootedGraph plain = parse_edges("0102");
    CHECK(plain.roots == 0);
    CHECK(serialize_edges(plain.g) == "0102");

    // First-appearance labelling: '1' occurs first, so it becomes vertex 0.
    RootedGraph swapped = parse_edges("1012");
    CHECK(swapped.g.n == 3);
    CHECK(swapped.g.degree(0) == 2);
    CHECK(serialize_edges(swapped.g) == "0102");

    CHECK(parse_edges("").g.n == 0);
    CHECK(serialize_edges(Graph()) == "");

    CHECK_THROWS_AS(parse_edges("r0r"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edges("rx"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edges("rr"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edges("r0r0"), std::invalid_argument);

    // Round trip through serialize/parse: the parser relabels by first
    // appearance, so the result is isomorphic (not index-identical).
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = random_connected(rng, 2 + int(rng() % 8));
        RootedGraph back = parse_edges(serialize_edges(g));
        CHECK(back.g.n == g.n);
        CHECK(back.roots == 0);
        CHECK(isomorphic(back.g, g).has_value());
    }
}

TEST_CASE("named families") {
    CHECK(build_path(1).edge_count() == 0);
    CHECK(build_path(5).edge_count() == 4);
    CHECK(degree_multiset(build_cycle(6)) == std::vector<int>{2, 2, 2, 2, 2, 2});
    CHECK(build_complete(4).edge_count() == 6);
    CHECK(build_complete(1).edge_count() == 0);

    // E_4 is the 4-path; E_5 the fork; E_n has n vertices and n-1 edges.
    CHECK(isomorphic(build_e(4), build_path(4)).has_value());
    CHECK(degree_multiset(build_e(5)) == std::vector<int>{1, 1, 1, 2, 3});
    for (int n = 4; n <= 12; ++n) {
        Graph e = build_e(n);
        CHECK(e.n == n);
        CHECK(e.edge_count() == n - 1);
        CHECK(e.connected());
    }

    // E'_4 is the paw; E'_n has n vertices, n edges, one triangle.
    CHECK(degree_multiset(build_e_prime(4)) == std::vector<int>{1, 2, 2, 3});
    for (int n = 4; n <= 12; ++n) {
        Graph ep = build_e_prime(n);
        CHECK(ep.n == n);
        CHECK(ep.edge_count() == n);
        CHECK(ep.connected());
    }

    CHECK_THROWS_AS(build_e(3), std::invalid_argument);
    CHECK_THROWS_AS(build_e_prime(3), std::invalid_argument);
}

TEST_CASE("claw and diamond detection") {
    Graph claw(4);
    for (int v = 1; v < 4; ++v) claw.add_edge(0, v);
    CHECK(claw.has_induced_claw());
    CHECK(!claw.has_induced_diamond());

    Graph diamond = build_complete(4);
    // K4 contains no induced diamond; removing one edge creates one.
    CHECK(!diamond.has_induced_claw());
    CHECK(!diamond.has_induced_diamond());
    Graph k4e(4);
    k4e.add_edge(0, 1);
    k4e.add_edge(0, 2);
    k4e.add_edge(0, 3);
    k4e.add_edge(1, 2);
    k4e.add_edge(1, 3);
    CHECK(k4e.has_induced_diamond());
    CHECK(!k4e.has_induced_claw());

    CHECK(!build_path(6).has_induced_claw());
    CHECK(!build_cycle(5).has_induced_diamond());
    CHECK(build_e(6).has_induced_claw());  // degree-3 vertex with independent neighbours

    // A diamond hiding inside a larger graph.
    Graph host = k4e;
    int v = host.add_vertex();
    host.add_edge(2, v);
    CHECK(host.has_induced_diamond());
}

TEST_CASE("bipartition splits connected bipartite graphs") {
    auto parts = bipartition(build_path(4), 0);
    REQUIRE(parts.has_value());
    CHECK(parts->first == 0b0101);
    CHECK(parts->second == 0b1010);

    auto from_other_end = bipartition(build_path(4), 3);
    REQUIRE(from_other_end.has_value());
    CHECK(from_other_end->first == 0b1010);

    auto c6 = bipartition(build_cycle(6), 2);
    REQUIRE(c6.has_value());
    CHECK((c6->first & (uint64_t(1) << 2)) != 0);
    CHECK(__builtin_popcountll(c6->first) == 3);
    CHECK((c6->first & c6->second) == 0);
    CHECK((c6->first | c6->second) == build_cycle(6).vertex_mask());

    CHECK(!bipartition(build_cycle(5), 0).has_value());
    CHECK(!bipartition(build_complete(3), 1).has_value());

    Graph disconnected(4);
    disconnected.add_edge(0, 1);
    CHECK(!bipartition(disconnected, 0).has_value());
}

TEST_CASE("path and clique extensions") {
    RootedGraph k1{Graph(1), 0b1};

    // path_ext(ell) over a rooted K1 is a path on ell + 2 vertices.
    for (int ell = 0; ell <= 4; ++ell) {
        Graph p = extend(k1, path_ext(ell));
        CHECK(p.n == ell + 2);
        CHECK(isomorphic(p, build_path(ell + 2)).has_value());
    }

    // clique_ext joins a complete graph to every root.
    RootedGraph p2{build_path(2), 0b10};
    Graph with_clique = extend(p2, clique_ext(3));
    CHECK(with_clique.n == 5);
    CHECK(with_clique.edge_count() == 1 + 3 + 3);
    CHECK(with_clique.degree(1) == 4);

    Graph pc = extend(k1, path_clique_ext(1, 2));
    CHECK(pc.n == 1 + 2 + 2);
    CHECK(pc.edge_count() == 2 + 1 + 2);

    // Multi-root attachment: v0 joins every root.
    RootedGraph both_ends{build_path(3), 0b101};
    Graph joined = extend(both_ends, path_ext(0));
    CHECK(joined.n == 4);
    CHECK(isomorphic(joined, build_cycle(4)).has_value());

    CHECK_THROWS_AS(extend(both_ends, path_ext(-1)), std::invalid_argument);
    CHECK_THROWS_AS(extend(RootedGraph{build_path(3), 0}, path_ext(0)), std::invalid_argument);
    CHECK_THROWS_AS(extend(RootedGraph{build_path(3), 0b1000}, path_ext(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(extend(both_ends, clique_ext(0)), std::invalid_argument);
}

TEST_CASE("augmented and twisted path extensions") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 1 + int(rng() % 6);
        Graph g = random_connected(rng, n);
        uint64_t roots = 0;
        while (roots == 0) roots = rng() & g.vertex_mask();
        RootedGraph f{g, roots};
        int r = __builtin_popcountll(roots);
        int ell = int(rng() % 4);

        Graph ape = extend(f, ape_ext(ell));
        CHECK(ape.n == n + ell + 4);
        CHECK(ape.edge_count() == g.edge_count() + r + ell + 3);

        Graph tpe = extend(f, tpe_ext(ell));
        CHECK(tpe.n == n + ell + 4);
        CHECK(tpe.edge_count() == g.edge_count() + r + ell + 4);
    }

    // Over the empty graph the extensions produce the E and E' families.
    CHECK(isomorphic(extend(RootedGraph{}, ape_ext(6)), build_e(10)).has_value());
    CHECK(isomorphic(extend(RootedGraph{}, ape_ext(0)), build_e(4)).has_value());
    for (int n = 4; n <= 9; ++n)
        CHECK(isomorphic(extend(RootedGraph{}, tpe_ext(n - 4)), build_e_prime(n)).has_value());

    // path_augment glues the second rooted graph onto the path's far end.
    RootedGraph other{build_path(3), 0b010};
    Graph glued = extend(RootedGraph{Graph(1), 0b1}, path_augment(1, other));
    CHECK(glued.n == 1 + 2 + 3);
    CHECK(glued.edge_count() == 2 + 2 + 1);
    CHECK(glued.degree(2) == 2);  // v_1: path predecessor plus other's root
}

TEST_CASE("line graphs") {
    // L(P4 rooted at an inner vertex) is P3 rooted at its two incident edges.
    SingleRootedGraph p4{build_path(4), 1};
    RootedGraph lp4 = line_graph(p4);
    CHECK(lp4.g.n == 3);
    CHECK(lp4.g.edge_count() == 2);
    CHECK(lp4.roots == 0b011);
    CHECK(lp4.g.has_edge(0, 1));
    CHECK(lp4.g.has_edge(1, 2));

    // L(K_{1,3} rooted at the centre) is a triangle, all vertices roots.
    Graph star(4);
    for (int v = 1; v < 4; ++v) star.add_edge(0, v);
    RootedGraph lstar = line_graph({star, 0});
    CHECK(lstar.g.n == 3);
    CHECK(lstar.g.edge_count() == 3);
    CHECK(lstar.roots == 0b111);

    // Edge count of L(H): sum over vertices of C(deg, 2); L(H) is claw-free;
    // the root set is the edges at H's root.
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 2 + int(rng() % 6);
        Graph h = random_connected(rng, n);
        int root = int(rng() % n);
        RootedGraph lg = line_graph({h, root});
        CHECK(lg.g.n == h.edge_count());
        int expect = 0;
        for (int v = 0; v < n; ++v) expect += h.degree(v) * (h.degree(v) - 1) / 2;
        CHECK(lg.g.edge_count() == expect);
        CHECK(!lg.g.has_induced_claw());
        CHECK(__builtin_popcountll(lg.roots) == h.degree(root));
    }
}
