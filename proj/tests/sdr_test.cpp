#include <doctest.h>

#include <algorithm>
#include <set>

#include "linarb/errors.hpp"
#include "linarb/generate.hpp"
#include "linarb/max_flow.hpp"
#include "linarb/rng.hpp"
#include "linarb/sdr.hpp"
#include "linarb/solver.hpp"
#include "oracles.hpp"

using namespace linarb;

namespace {

std::vector<Vertex> right_neighbors(const Graph& g, const DegeneracyOrdering& ord, Vertex v)
{
    std::vector<Vertex> out;
    for (const auto& inc : g.incident(v))
        if (ord.position[inc.neighbor] > ord.position[v])
            out.push_back(inc.neighbor);
    std::sort(out.begin(), out.end());
    return out;
}

// Two hubs 0 and 1 of degree 6 sharing neighbours 4 and 5.
Graph two_hub_fixture()
{
    Graph g(10);
    for (Vertex x : {1, 2, 3, 4, 5, 8})
        g.add_edge(0, x);
    for (Vertex x : {4, 5, 6, 7, 9})
        g.add_edge(1, x);
    g.add_edge(2, 3);
    return g;
}

} // namespace

TEST_CASE("max flow on a small network")
{
    // classic 6-node example with max flow 23
    MaxFlow f(6);
    f.add_arc(0, 1, 16);
    f.add_arc(0, 2, 13);
    f.add_arc(1, 2, 10);
    f.add_arc(2, 1, 4);
    f.add_arc(1, 3, 12);
    f.add_arc(3, 2, 9);
    f.add_arc(2, 4, 14);
    f.add_arc(4, 3, 7);
    f.add_arc(3, 5, 20);
    const int last = f.add_arc(4, 5, 4);
    CHECK(f.solve(0, 5) == 23);
    CHECK(f.flow_on(last) == 4);
}

TEST_CASE("max flow matches brute-force bipartite matching")
{
    SplitMix64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const int left = 1 + static_cast<int>(rng.uniform_below(5));
        const int right = 1 + static_cast<int>(rng.uniform_below(5));
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < left; ++a)
            for (int b = 0; b < right; ++b)
                if (rng.uniform_below(2))
                    edges.push_back({a, b});
        MaxFlow f(left + right + 2);
        const int s = left + right, t = s + 1;
        for (int a = 0; a < left; ++a)
            f.add_arc(s, a, 1);
        for (int b = 0; b < right; ++b)
            f.add_arc(left + b, t, 1);
        for (auto [a, b] : edges)
            f.add_arc(a, left + b, 1);

        int best = 0;
        for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
            std::set<int> ls, rs;
            bool ok = true;
            int size = 0;
            for (std::size_t e = 0; e < edges.size() && ok; ++e)
                if (mask >> e & 1u) {
                    ok = ls.insert(edges[e].first).second && rs.insert(edges[e].second).second;
                    ++size;
                }
            if (ok)
                best = std::max(best, size);
        }
        CHECK(f.solve(s, t) == best);
    }
}

TEST_CASE("sdr size")
{
    CHECK(sdr_size(6, 2) == 2);
    CHECK(sdr_size(15, 3) == 4);
    CHECK(sdr_size(6, 1) == 5);
}

TEST_CASE("single high vertex gets r of its right neighbours")
{
    const Graph star = star_graph(6);
    const auto ord = ordering_from_sequence(star, {0, 1, 2, 3, 4, 5, 6});
    const SdrAssignment s = compute_sdr(star, ord, 6);
    CHECK(s.r == 5);
    REQUIRE(s.high_set == std::vector<Vertex>{0});
    const auto reps = s.representatives_of(0);
    CHECK(reps.size() == 5);
    for (Vertex x : reps) {
        CHECK(star.has_edge(0, x));
        CHECK(s.owner[x] == 0);
    }
}

TEST_CASE("two-hub fixture has a 2-SDR and the matcher returns one")
{
    const Graph g = two_hub_fixture();
    const auto ord = degeneracy_ordering(g);
    REQUIRE(ord.k == 2);
    REQUIRE(oracle::max_degree(g) == 6);
    const SdrAssignment s = compute_sdr(g, ord, 6);
    REQUIRE(s.r == 2);
    REQUIRE(s.high_set == std::vector<Vertex>{0, 1});

    // every disjoint pair of 2-subsets of N_R(0), N_R(1)
    const auto a = right_neighbors(g, ord, 0);
    const auto b = right_neighbors(g, ord, 1);
    std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> valid;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            for (std::size_t p = 0; p < b.size(); ++p)
                for (std::size_t q = p + 1; q < b.size(); ++q) {
                    std::vector<Vertex> x{a[i], a[j]}, y{b[p], b[q]};
                    if (std::find_first_of(x.begin(), x.end(), y.begin(), y.end()) == x.end())
                        valid.insert({x, y});
                }
    CHECK_FALSE(valid.empty());
    const auto r0 = s.representatives_of(0);
    const auto r1 = s.representatives_of(1);
    CHECK(valid.count({{r0.begin(), r0.end()}, {r1.begin(), r1.end()}}) == 1);
}

TEST_CASE("sdr properties on random regularized graphs")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int k = 1 + static_cast<int>(seed % 3);
        const Graph g = generate_k_degenerate(80, k, 2 * k * k - k + static_cast<int>(seed % 4), seed);
        const Regularized reg = regularize(g);
        const int delta = oracle::max_degree(reg.graph);
        const auto ord = regular_ordering(reg.graph, delta);
        const SdrAssignment s = compute_sdr(reg.graph, ord, delta);
        CHECK(s.r == (delta - ord.k) / ord.k);

        std::set<Vertex> all;
        for (std::size_t h = 0; h < s.high_set.size(); ++h) {
            const Vertex v = s.high_set[h];
            CHECK(static_cast<int>(s.reps[h].size()) == s.r);
            for (Vertex x : s.reps[h]) {
                CHECK(reg.graph.has_edge(v, x));
                CHECK(ord.position[x] > ord.position[v]);
                CHECK(s.owner[x] == v);
                all.insert(x);
            }
        }
        CHECK(all.size() == s.high_set.size() * static_cast<std::size_t>(s.r));

        // each vertex lies in at most k of the sets N_R
        std::vector<int> count(static_cast<std::size_t>(reg.graph.num_vertices()), 0);
        for (Vertex v : s.high_set)
            for (Vertex x : right_neighbors(reg.graph, ord, v))
                ++count[x];
        CHECK(*std::max_element(count.begin(), count.end()) <= ord.k);
    }
}

TEST_CASE("hall certificate examples")
{
    const Graph g = two_hub_fixture();
    const auto ord = degeneracy_ordering(g);
    const std::vector<std::vector<Vertex>> empty{{}};
    CHECK(hall_certificate_check(g, ord, 6, empty));
    const std::vector<std::vector<Vertex>> one{{0}};
    CHECK(hall_certificate_check(g, ord, 6, one));

    // S = V_Δ, against a direct union
    std::set<Vertex> uni;
    for (Vertex v : {0, 1})
        for (Vertex x : right_neighbors(g, ord, v))
            uni.insert(x);
    CHECK(uni.size() >= 2 * static_cast<std::size_t>(sdr_size(6, 2)));
    const std::vector<std::vector<Vertex>> both{{0, 1}};
    CHECK(hall_certificate_check(g, ord, 6, both));
    CHECK(hall_full_check(g, ord, 6));

    const std::vector<std::vector<Vertex>> low{{2}};
    CHECK_THROWS_AS(hall_certificate_check(g, ord, 6, low), InputError);
}

TEST_CASE("compute_sdr argument checks")
{
    const Graph g = two_hub_fixture();
    const auto ord = degeneracy_ordering(g);
    CHECK_THROWS_AS(compute_sdr(g, ord, 1), InputError);
    CHECK_THROWS_AS(compute_sdr(g, ord, 7), InputError);
}
