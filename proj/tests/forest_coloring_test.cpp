#include <doctest.h>

#include <algorithm>

#include "linarb/errors.hpp"
#include "linarb/forest_coloring.hpp"
#include "linarb/generate.hpp"
#include "linarb/rng.hpp"
#include "oracles.hpp"

using namespace linarb;

namespace {

EdgeId edge(const Graph& g, Vertex a, Vertex b)
{
    return *g.find_edge(a, b);
}

void check_degrees_against_scan(const ForestColoring& fc)
{
    const Graph& g = fc.graph();
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        int colored = 0, internal = 0;
        for (ClassId j = 0; j < fc.num_classes(); ++j) {
            const int d = oracle::class_degree(g, fc.colors(), j, v);
            CHECK(fc.class_degree(v, j) == d);
            colored += d;
            internal += d == 2;
        }
        CHECK(fc.colored_degree(v) == colored);
        CHECK(fc.internal_count(v) == internal);
    }
}

} // namespace

TEST_CASE("color sets of an isolated vertex and of a single edge")
{
    const Graph g = path_graph(2);
    ForestColoring fc(g, 3);
    auto s = color_sets(fc, 0);
    CHECK(s.c0 == std::vector<ClassId>{0, 1, 2});
    CHECK(s.c1.empty());
    CHECK(s.c2.empty());

    fc.assign(0, 2);
    s = color_sets(fc, 0);
    CHECK(s.c0 == std::vector<ClassId>{0, 1});
    CHECK(s.c1 == std::vector<ClassId>{2});
}

TEST_CASE("2|C2| + |C1| equals colored degree")
{
    SplitMix64 rng(12);
    const Graph g = random_gnm(25, 80, 12);
    ForestColoring fc(g, 5);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto j = static_cast<ClassId>(rng.uniform_below(5));
        try {
            fc.assign(e, j);
        } catch (const FeasibilityError&) {
        }
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto s = color_sets(fc, v);
        CHECK(2 * s.c2.size() + s.c1.size() == static_cast<std::size_t>(fc.colored_degree(v)));
        CHECK(s.c0.size() + s.c1.size() + s.c2.size() == 5);
    }
    check_degrees_against_scan(fc);
}

TEST_CASE("assign, closing a cycle and overflow")
{
    const Graph g = complete_graph(4);
    ForestColoring fc(g, 2);
    fc.assign(edge(g, 0, 1), 0);
    CHECK(fc.class_degree(0, 0) == 1);
    CHECK(fc.class_degree(1, 0) == 1);

    fc.assign(edge(g, 1, 2), 0);
    CHECK(fc.would_close_cycle(0, 0, 2));
    fc.assign(edge(g, 0, 2), 0);
    CHECK(fc.on_monochromatic_cycle(edge(g, 0, 2)));
    CHECK(fc.on_monochromatic_cycle(edge(g, 0, 1)));

    CHECK_THROWS_AS(fc.assign(edge(g, 0, 3), 0), FeasibilityError);
    CHECK(fc.color_of(edge(g, 0, 3)) == kUncolored);
    CHECK_THROWS_AS(fc.assign(edge(g, 0, 1), 1), InputError);
    check_degrees_against_scan(fc);
}

TEST_CASE("swap_colors identities")
{
    const Graph g = path_graph(4);
    ForestColoring fc(g, 2);
    fc.assign(0, 0);
    fc.assign(1, 0);
    fc.assign(2, 1);
    const auto before = fc.colors();
    fc.swap_colors(0, 1);
    CHECK(fc.colors() == before);
    fc.swap_colors(1, 2);
    CHECK(fc.color_of(1) == 1);
    CHECK(fc.color_of(2) == 0);
    fc.swap_colors(1, 2);
    CHECK(fc.colors() == before);
    check_degrees_against_scan(fc);
}

TEST_CASE("swap that would overflow leaves the state unchanged")
{
    Graph h(4);
    h.add_edge(0, 1);
    h.add_edge(0, 2);
    h.add_edge(0, 3);
    h.add_edge(1, 2);
    ForestColoring fc(h, 2);
    fc.assign(edge(h, 0, 1), 0);
    fc.assign(edge(h, 0, 2), 0);
    fc.assign(edge(h, 0, 3), 1);
    fc.assign(edge(h, 1, 2), 0);
    // 0-3 moving into class 0 gives vertex 0 three class-0 edges
    const auto saved = fc.colors();
    CHECK_THROWS_AS(fc.swap_colors(edge(h, 0, 3), edge(h, 1, 2)), FeasibilityError);
    CHECK(fc.colors() == saved);
    check_degrees_against_scan(fc);
}

TEST_CASE("case-2 style swap on a six-vertex fixture")
{
    // v = 0 with representatives w = 1, u = 2; v-w has class xi = 0 and
    // closes the class-0 cycle 0-1-3-4-0; v-u has class eta = 1 on the
    // class-1 path 0-2-5.
    Graph g(6);
    const EdgeId vw = g.add_edge(0, 1);
    const EdgeId vu = g.add_edge(0, 2);
    g.add_edge(1, 3);
    g.add_edge(3, 4);
    g.add_edge(0, 4);
    g.add_edge(2, 5);
    ForestColoring fc(g, 2);
    fc.assign(vw, 0);
    fc.assign(vu, 1);
    fc.assign(edge(g, 1, 3), 0);
    fc.assign(edge(g, 3, 4), 0);
    fc.assign(edge(g, 0, 4), 0);
    fc.assign(edge(g, 2, 5), 1);
    CHECK(fc.on_monochromatic_cycle(vw));

    fc.swap_colors(vw, vu);
    CHECK(fc.color_of(vw) == 1);
    CHECK(fc.color_of(vu) == 0);
    CHECK_FALSE(fc.on_monochromatic_cycle(vw));
    CHECK_FALSE(fc.on_monochromatic_cycle(vu));
    check_degrees_against_scan(fc);
    CHECK(oracle::class_is_linear_forest(g, fc.colors(), 0));
    CHECK(oracle::class_is_linear_forest(g, fc.colors(), 1));
}

TEST_CASE("would_close_cycle examples")
{
    const Graph g = path_graph(5);
    ForestColoring fc(g, 2);
    CHECK_FALSE(fc.would_close_cycle(0, 0, 4));
    fc.assign(0, 0);
    fc.assign(1, 0);
    fc.assign(3, 0);
    CHECK(fc.would_close_cycle(0, 0, 2));
    CHECK_FALSE(fc.would_close_cycle(0, 0, 3));
    CHECK_FALSE(fc.would_close_cycle(1, 0, 1));
}

TEST_CASE("would_close_cycle agrees with DFS connectivity")
{
    SplitMix64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_gnm(30, 90, rng.next());
        ForestColoring fc(g, 4);
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const auto j = static_cast<ClassId>(rng.uniform_below(4));
            const Edge& ed = g.edge(e);
            if (fc.class_degree(ed.u, j) < 2 && fc.class_degree(ed.v, j) < 2 && !fc.would_close_cycle(j, ed.u, ed.v))
                fc.assign(e, j);
        }
        for (int q = 0; q < 200; ++q) {
            const auto j = static_cast<ClassId>(rng.uniform_below(4));
            const auto a = static_cast<Vertex>(rng.uniform_below(30));
            const auto b = static_cast<Vertex>(rng.uniform_below(30));
            const bool connected = oracle::class_component(g, fc.colors(), j, a).count(b) > 0;
            CHECK(fc.would_close_cycle(j, a, b) == connected);
        }
        for (ClassId j = 0; j < 4; ++j)
            CHECK(oracle::class_is_linear_forest(g, fc.colors(), j));
    }
}

TEST_CASE("path_through")
{
    const Graph g = path_graph(6);
    ForestColoring fc(g, 1);
    fc.assign(2, 0);  // 2-3
    CHECK(fc.path_through(0, 3) == std::vector<Vertex>{2, 3});
    fc.assign(1, 0);  // 1-2
    CHECK(fc.path_through(0, 2) == std::vector<Vertex>{1, 2, 3});
    fc.assign(0, 0);
    fc.assign(3, 0);
    fc.assign(4, 0);
    CHECK(fc.path_through(0, 3) == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    CHECK_THROWS_AS(fc.path_through(0, 7), InputError);

    ForestColoring empty(g, 1);
    CHECK_THROWS_AS(empty.path_through(0, 2), InputError);

    const Graph c = cycle_graph(4);
    ForestColoring cyc(c, 1);
    for (EdgeId e = 0; e < 4; ++e)
        cyc.assign(e, 0);
    const auto around = cyc.path_through(0, 2);
    CHECK(around.size() == 5);
    CHECK(around.front() == 2);
    CHECK(around.back() == 2);
}

TEST_CASE("path_through matches an independent walk on a scrambled path")
{
    // path 4-0-5-2-1-3 stored with shuffled ids
    Graph g(6);
    const std::vector<Vertex> seq{4, 0, 5, 2, 1, 3};
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        g.add_edge(seq[i], seq[i + 1]);
    ForestColoring fc(g, 1);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        fc.assign(e, 0);
    // from the end with the smaller id, 3
    std::vector<Vertex> walk{3};
    Vertex prev = kNoVertex;
    while (true) {
        Vertex next = kNoVertex;
        for (const auto& inc : g.incident(walk.back()))
            if (inc.neighbor != prev)
                next = inc.neighbor;
        if (next == kNoVertex)
            break;
        prev = walk.back();
        walk.push_back(next);
    }
    CHECK(fc.path_through(0, 2) == walk);
}

TEST_CASE("class_view and recolor")
{
    const Graph g = path_graph(4);
    ForestColoring fc(g, 2);
    fc.assign(0, 0);
    fc.assign(1, 0);
    fc.assign(2, 1);
    const auto view = fc.class_view(0);
    CHECK(view.component[0] == view.component[2]);
    CHECK(view.component[0] != view.component[3]);
    fc.recolor(1, 1);
    CHECK(fc.class_degree(1, 0) == 1);
    CHECK(fc.class_degree(2, 1) == 2);
    fc.recolor(0, 1);
    CHECK(fc.path_through(1, 0) == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(fc.class_degree(0, 0) == 0);
    check_degrees_against_scan(fc);
}
