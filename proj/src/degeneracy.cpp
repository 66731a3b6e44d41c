#include "linarb/degeneracy.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "linarb/errors.hpp"

namespace linarb {

DegeneracyOrdering degeneracy_ordering(const Graph& g)
{
    const Vertex n = g.num_vertices();
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<char> removed(static_cast<std::size_t>(n), 0);

    // Lazy min-heap: stale (degree, id) entries are skipped on pop.
    using Entry = std::pair<int, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        heap.emplace(degree[v], v);
    }

    std::vector<Vertex> removal;
    removal.reserve(static_cast<std::size_t>(n));
    int k = 0;
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (removed[v] || d != degree[v])
            continue;
        removed[v] = 1;
        removal.push_back(v);
        k = std::max(k, d);
        for (const Incidence& inc : g.incident(v)) {
            const Vertex w = inc.neighbor;
            if (!removed[w])
                heap.emplace(--degree[w], w);
        }
    }

    std::reverse(removal.begin(), removal.end());
    DegeneracyOrdering ord = ordering_from_sequence(g, std::move(removal));
    ord.k = k;
    return ord;
}

DegeneracyOrdering ordering_from_sequence(const Graph& g, std::vector<Vertex> order)
{
    const Vertex n = g.num_vertices();
    if (static_cast<Vertex>(order.size()) != n)
        throw InputError("ordering length does not match vertex count");

    DegeneracyOrdering ord;
    ord.position.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex v = order[i];
        if (!g.has_vertex(v) || ord.position[v] != -1)
            throw InputError("ordering is not a permutation of the vertex set");
        ord.position[v] = static_cast<int>(i);
    }
    ord.order = std::move(order);

    int k = 0;
    for (Vertex v = 0; v < n; ++v)
        k = std::max(k, left_degree(g, ord, v));
    ord.k = k;
    return ord;
}

int left_degree(const Graph& g, const DegeneracyOrdering& ord, Vertex v)
{
    int count = 0;
    for (const Incidence& inc : g.incident(v))
        if (ord.before(inc.neighbor, v))
            ++count;
    return count;
}

bool verify_ordering(const Graph& g, const DegeneracyOrdering& ord, int k)
{
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (left_degree(g, ord, v) > k)
            return false;
    return true;
}

NeighborSplit left_right_neighbors(const Graph& g, const DegeneracyOrdering& ord, Vertex v)
{
    g.check_vertex(v);
    NeighborSplit split;
    for (const Incidence& inc : g.incident(v))
        (ord.before(inc.neighbor, v) ? split.left : split.right).push_back(inc.neighbor);
    std::sort(split.left.begin(), split.left.end());
    std::sort(split.right.begin(), split.right.end());
    return split;
}

} // namespace linarb
