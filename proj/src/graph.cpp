#include "linarb/graph.hpp"

#include <algorithm>
#include <string>

#include "linarb/errors.hpp"

namespace linarb {

Graph::Graph(Vertex n)
{
    if (n < 0)
        throw InputError("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(n));
}

Vertex Graph::add_vertex()
{
    adjacency_.emplace_back();
    return num_vertices() - 1;
}

void Graph::check_vertex(Vertex v) const
{
    if (!has_vertex(v))
        throw InputError("unknown vertex " + std::to_string(v));
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const
{
    if (!has_vertex(u) || !has_vertex(v))
        return std::nullopt;
    // scan the shorter list
    if (degree(u) > degree(v))
        std::swap(u, v);
    for (const Incidence& inc : adjacency_[u])
        if (inc.neighbor == v)
            return inc.edge;
    return std::nullopt;
}

EdgeId Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw InputError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    const auto id = num_edges();
    edges_.push_back(Edge{std::min(u, v), std::max(u, v)});
    adjacency_[u].push_back({v, id});
    adjacency_[v].push_back({u, id});
    return id;
}

int max_degree(const Graph& g)
{
    int best = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

std::vector<EdgeId> edges_incident_to_set(const Graph& g, Vertex v, std::span<const Vertex> w_set)
{
    g.check_vertex(v);
    std::vector<Vertex> members(w_set.begin(), w_set.end());
    for (Vertex w : members)
        g.check_vertex(w);
    std::sort(members.begin(), members.end());

    std::vector<EdgeId> out;
    for (const Incidence& inc : g.incident(v))
        if (std::binary_search(members.begin(), members.end(), inc.neighbor))
            out.push_back(inc.edge);
    return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    const Vertex n = g.num_vertices();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> components;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        std::vector<Vertex> comp;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (const Incidence& inc : g.incident(x)) {
                if (!seen[inc.neighbor]) {
                    seen[inc.neighbor] = 1;
                    stack.push_back(inc.neighbor);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    Subgraph sub;
    sub.graph = Graph(static_cast<Vertex>(vertices.size()));
    sub.to_parent_vertex.assign(vertices.begin(), vertices.end());

    std::vector<Vertex> local(static_cast<std::size_t>(g.num_vertices()), kNoVertex);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        g.check_vertex(vertices[i]);
        local[vertices[i]] = static_cast<Vertex>(i);
    }
    for (Vertex x : vertices) {
        for (const Incidence& inc : g.incident(x)) {
            const Vertex y = inc.neighbor;
            if (local[y] == kNoVertex || y < x)
                continue;
            sub.graph.add_edge(local[x], local[y]);
            sub.to_parent_edge.push_back(inc.edge);
        }
    }
    return sub;
}

} // namespace linarb
