#include <doctest.h>

#include <algorithm>

#include "linarb/errors.hpp"
#include "linarb/generate.hpp"
#include "linarb/graph.hpp"

using namespace linarb;

TEST_CASE("max_degree on small graphs")
{
    CHECK(max_degree(Graph{}) == 0);
    CHECK(max_degree(path_graph(4)) == 2);
    CHECK(max_degree(star_graph(6)) == 6);
}

TEST_CASE("add_edge rejects bad edges")
{
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
    CHECK_THROWS_AS(g.add_edge(-1, 0), InputError);
    CHECK(g.num_edges() == 1);
    CHECK(g.edge(0).u == 0);
    CHECK(g.edge(0).v == 1);
}

TEST_CASE("edges are stored with u < v")
{
    Graph g(3);
    const EdgeId e = g.add_edge(2, 0);
    CHECK(g.edge(e) == Edge{0, 2});
    CHECK(g.edge(e).other(0) == 2);
    CHECK(g.find_edge(0, 2) == e);
    CHECK(g.find_edge(2, 0) == e);
    CHECK_FALSE(g.find_edge(1, 2).has_value());
}

TEST_CASE("edges_incident_to_set")
{
    const Graph star = star_graph(4);
    const std::vector<Vertex> leaves{1, 2, 3, 4};
    CHECK(edges_incident_to_set(star, 0, leaves).size() == 4);
    CHECK(edges_incident_to_set(star, 0, {}).empty());

    const Graph p3 = path_graph(3);
    const std::vector<Vertex> a{0};
    const auto edges = edges_incident_to_set(p3, 1, a);
    REQUIRE(edges.size() == 1);
    CHECK(p3.edge(edges[0]) == Edge{0, 1});
}

TEST_CASE("connected_components")
{
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    const auto c = connected_components(two);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == std::vector<Vertex>{0, 1});
    CHECK(c[1] == std::vector<Vertex>{2, 3});

    CHECK(connected_components(cycle_graph(5)).size() == 1);
    CHECK(connected_components(Graph(3)).size() == 3);
}

TEST_CASE("degree sum and component partition on random graphs")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Graph g = random_gnm(40, 30 + static_cast<long>(seed), seed);
        long sum = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            int count = 0;
            for (const Edge& e : g.edges())
                count += (e.u == v) + (e.v == v);
            CHECK(count == g.degree(v));
            sum += g.degree(v);
        }
        CHECK(sum == 2L * g.num_edges());

        std::vector<int> comp_of(static_cast<std::size_t>(g.num_vertices()), -1);
        const auto comps = connected_components(g);
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (Vertex v : comps[c]) {
                CHECK(comp_of[v] == -1);
                comp_of[v] = static_cast<int>(c);
            }
        CHECK(std::count(comp_of.begin(), comp_of.end(), -1) == 0);
        for (const Edge& e : g.edges())
            CHECK(comp_of[e.u] == comp_of[e.v]);
    }
}

TEST_CASE("induced_subgraph keeps the given vertex order")
{
    const Graph g = cycle_graph(5);
    const std::vector<Vertex> keep{3, 1, 2};
    const Subgraph s = induced_subgraph(g, keep);
    CHECK(s.graph.num_vertices() == 3);
    CHECK(s.graph.num_edges() == 2);  // 1-2, 2-3
    for (EdgeId e = 0; e < s.graph.num_edges(); ++e) {
        const Edge& local = s.graph.edge(e);
        const Edge& parent = g.edge(s.to_parent_edge[e]);
        const Vertex a = s.to_parent_vertex[local.u];
        const Vertex b = s.to_parent_vertex[local.v];
        CHECK(std::min(a, b) == parent.u);
        CHECK(std::max(a, b) == parent.v);
    }
}
