#include <doctest.h>

#include "linarb/edge_list.hpp"
#include "linarb/errors.hpp"
#include "linarb/generate.hpp"
#include "linarb/rng.hpp"
#include "oracles.hpp"

using namespace linarb;

namespace {

std::size_t parse_error_line(std::string_view text, bool one_based = false)
{
    try {
        parse_edge_list(text, one_based);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("parse_edge_list basics")
{
    const Graph p3 = parse_edge_list("0 1\n1 2");
    CHECK(p3.num_vertices() == 3);
    CHECK(p3.num_edges() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));

    const Graph h = parse_edge_list("# graph\np 5 1\n\n3 4   # trailing\n");
    CHECK(h.num_vertices() == 5);
    CHECK(h.num_edges() == 1);

    CHECK(parse_edge_list("").num_vertices() == 0);
    CHECK(parse_edge_list("0 1\r\n1 2\r\n").num_edges() == 2);
}

TEST_CASE("parse_edge_list errors carry line numbers")
{
    CHECK(parse_error_line("p 3 1\n0 0") == 2);
    CHECK(parse_error_line("# comment\n0 1\n\n0 1") == 4);
    CHECK(parse_error_line("# comment\n0 1\n\n1 0") == 4);
    CHECK(parse_error_line("p 3 1\n0 3") == 2);
    CHECK(parse_error_line("0 1\n1 x\n") == 2);
    CHECK(parse_error_line("0 1 2\n") == 1);
    CHECK(parse_error_line("0 -1\n") == 1);
    CHECK(parse_error_line("p 3 2\n0 1\n") == 1);
    CHECK(parse_error_line("0 1\np 3 1\n") == 2);
    CHECK(parse_error_line("1.5 2\n") == 1);

    try {
        parse_edge_list("p 3 1\n0 0");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
}

TEST_CASE("DIMACS-style one-based input")
{
    const Graph g = parse_edge_list("c comment\np edge 3 2\ne 1 2\ne 2 3\n", true);
    CHECK(g.num_vertices() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(parse_edge_list("1 2\n2 3\n", true).num_vertices() == 3);
    CHECK(parse_error_line("e 0 1\n", true) == 1);
}

TEST_CASE("format_edge_list round trip")
{
    const Graph g = random_gnm(30, 60, 6);
    const std::string text = format_edge_list(g);
    const Graph back = parse_edge_list(text);
    CHECK(back.num_vertices() == g.num_vertices());
    CHECK(back.num_edges() == g.num_edges());
    for (const Edge& e : g.edges())
        CHECK(back.has_edge(e.u, e.v));
    CHECK(format_edge_list(back) == text);
}

TEST_CASE("coloring text")
{
    const Graph g = path_graph(3);
    const std::vector<ClassId> cls{1, 0};
    const std::string text = format_coloring(g, cls);
    CHECK(text == "0 1 2\n1 2 1\n");
    const auto parsed = parse_coloring(text);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].cls == 1);
    CHECK(parsed[1].cls == 0);
    CHECK_THROWS_AS(parse_coloring("0 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_coloring("0 1\n"), ParseError);
}

TEST_CASE("splitmix64 test vectors")
{
    SplitMix64 a(1234567);
    CHECK(a.next() == 6457827717110365317ull);
    CHECK(a.next() == 3203168211198807973ull);
    CHECK(a.next() == 9817491932198370423ull);
    CHECK(a.next() == 4593380528125082431ull);
    CHECK(a.next() == 16408922859458223821ull);

    SplitMix64 b(0);
    CHECK(b.next() == 16294208416658607535ull);
    CHECK(b.next() == 7960286522194355700ull);
    CHECK(b.next() == 487617019471545679ull);

    SplitMix64 c(5);
    for (int i = 0; i < 1000; ++i)
        CHECK(c.uniform_below(7) < 7);
}

TEST_CASE("generator examples")
{
    const Graph tree = generate_k_degenerate(50, 1, 0, 3);
    CHECK(tree.num_edges() == 49);
    CHECK(connected_components(tree).size() == 1);

    const Graph single = generate_k_degenerate(1, 3, 0, 1);
    CHECK(single.num_vertices() == 1);
    CHECK(single.num_edges() == 0);

    const Graph g = generate_k_degenerate(200, 2, 7, 42);
    CHECK(oracle::peels_with(g, 2));
    CHECK(oracle::max_degree(g) >= 7);

    CHECK_THROWS_AS(generate_k_degenerate(5, 2, 5, 1), InputError);
    CHECK_THROWS_AS(generate_k_degenerate(50, 2, 9, 1, 8), InputError);
    CHECK_THROWS_AS(generate_k_degenerate(0, 2, 0, 1), InputError);
}

TEST_CASE("generator is deterministic and honours the cap")
{
    const Graph a = generate_k_degenerate(300, 3, 15, 77);
    const Graph b = generate_k_degenerate(300, 3, 15, 77);
    CHECK(format_edge_list(a) == format_edge_list(b));
    CHECK(format_edge_list(a) != format_edge_list(generate_k_degenerate(300, 3, 15, 78)));

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph capped = generate_k_degenerate(200, 2, 8, seed, 8);
        CHECK(oracle::max_degree(capped) == 8);
        CHECK(oracle::peels_with(capped, 2));
    }
}

TEST_CASE("generator reaches large delta_min with pendants")
{
    const Graph g = generate_k_degenerate(60, 2, 40, 9);
    CHECK(oracle::max_degree(g) == 40);
    CHECK(oracle::peels_with(g, 2));
}

TEST_CASE("random k-trees")
{
    for (int k = 1; k <= 4; ++k) {
        const Graph g = random_k_tree(30, k, static_cast<std::uint64_t>(k));
        CHECK(g.num_edges() == k * (k + 1) / 2 + (30 - k - 1) * k);
        CHECK(oracle::peels_with(g, k));
        CHECK_FALSE(oracle::peels_with(g, k - 1));
    }
}
