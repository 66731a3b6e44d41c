#include "linarb/generate.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "linarb/errors.hpp"
#include "linarb/rng.hpp"

namespace linarb {

Graph generate_k_degenerate(Vertex n, int k, int delta_min, std::uint64_t seed, int max_degree)
{
    if (n < 1 || k < 1)
        throw InputError("generator needs n >= 1 and k >= 1");
    if (delta_min > n - 1)
        throw InputError("delta_min " + std::to_string(delta_min) + " unreachable on " + std::to_string(n) +
                         " vertices");
    if (max_degree > 0 && delta_min > max_degree)
        throw InputError("delta_min exceeds the degree cap");

    SplitMix64 rng(seed);
    const auto size = static_cast<std::size_t>(n);
    std::vector<std::vector<Vertex>> earlier(size);
    std::vector<int> degree(size, 0);
    std::vector<Vertex> open;                 // earlier vertices still below the cap
    std::vector<int> open_pos(size, -1);

    auto close = [&](Vertex x) {
        const int p = open_pos[x];
        open[p] = open.back();
        open_pos[open[p]] = p;
        open.pop_back();
        open_pos[x] = -1;
    };

    std::vector<Vertex> chosen;
    for (Vertex i = 0; i < n; ++i) {
        const auto want = static_cast<std::size_t>(std::min<Vertex>(k, i));
        chosen.clear();
        if (open.size() <= want) {
            chosen = open;
        } else {
            while (chosen.size() < want) {
                const Vertex x = open[rng.uniform_below(open.size())];
                if (std::find(chosen.begin(), chosen.end(), x) == chosen.end())
                    chosen.push_back(x);
            }
        }
        for (Vertex x : chosen) {
            earlier[i].push_back(x);
            ++degree[x];
            ++degree[i];
            if (max_degree > 0 && degree[x] >= max_degree)
                close(x);
        }
        if (max_degree <= 0 || degree[i] < max_degree) {
            open_pos[i] = static_cast<int>(open.size());
            open.push_back(i);
        }
    }

    // Shrink the core from the back until its max degree plus the freed
    // vertices (as pendants) reaches delta_min.
    std::vector<int> histogram(size + 1, 0);
    int top = 0;
    for (Vertex v = 0; v < n; ++v) {
        ++histogram[degree[v]];
        top = std::max(top, degree[v]);
    }
    Vertex core = n;
    while (top + (n - core) < delta_min) {
        const Vertex c = --core;
        --histogram[degree[c]];
        for (Vertex x : earlier[c]) {
            --histogram[degree[x]];
            ++histogram[--degree[x]];
        }
        while (top > 0 && histogram[top] == 0)
            --top;
    }

    Graph g(n);
    for (Vertex i = 0; i < core; ++i)
        for (Vertex x : earlier[i])
            g.add_edge(x, i);
    if (core < n) {
        Vertex hub = 0;
        while (degree[hub] != top)
            ++hub;
        for (Vertex p = core; p < n; ++p)
            g.add_edge(hub, p);
    }
    return g;
}

Graph random_k_tree(Vertex n, int k, std::uint64_t seed)
{
    if (k < 1 || n < 0)
        throw InputError("random_k_tree needs k >= 1");
    if (n <= k + 1)
        return complete_graph(n);

    SplitMix64 rng(seed);
    Graph g = complete_graph(k + 1);
    std::vector<std::vector<Vertex>> cliques;
    for (Vertex drop = 0; drop <= k; ++drop) {
        std::vector<Vertex> q;
        for (Vertex x = 0; x <= k; ++x)
            if (x != drop)
                q.push_back(x);
        cliques.push_back(std::move(q));
    }
    for (Vertex v = k + 1; v < n; ++v) {
        g.add_vertex();
        const std::vector<Vertex> base = cliques[rng.uniform_below(cliques.size())];
        for (Vertex x : base)
            g.add_edge(x, v);
        for (std::size_t drop = 0; drop < base.size(); ++drop) {
            std::vector<Vertex> q;
            for (std::size_t j = 0; j < base.size(); ++j)
                if (j != drop)
                    q.push_back(base[j]);
            q.push_back(v);
            cliques.push_back(std::move(q));
        }
    }
    return g;
}

Graph random_gnm(Vertex n, long m, std::uint64_t seed)
{
    const long possible = static_cast<long>(n) * (n - 1) / 2;
    if (n < 0 || m < 0 || m > possible)
        throw InputError("random_gnm: m out of range");
    SplitMix64 rng(seed);
    Graph g(n);
    while (g.num_edges() < m) {
        const auto u = static_cast<Vertex>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        const auto v = static_cast<Vertex>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        if (u != v && !g.has_edge(u, v))
            g.add_edge(u, v);
    }
    return g;
}

Graph complete_graph(Vertex n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph star_graph(Vertex leaves)
{
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

Graph path_graph(Vertex n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(Vertex n)
{
    Graph g = path_graph(n);
    if (n >= 3)
        g.add_edge(n - 1, 0);
    return g;
}

} // namespace linarb
