#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace linarb {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

/// Undirected edge, stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    Vertex other(Vertex x) const { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

/// Simple undirected graph on dense vertex ids 0..n-1. Edge ids are dense
/// in insertion order. Self-loops and parallel edges are rejected.
class Graph {
public:
    Graph() = default;
    explicit Graph(Vertex n);

    Vertex num_vertices() const { return static_cast<Vertex>(adjacency_.size()); }
    EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }

    Vertex add_vertex();
    /// Throws InputError on unknown ids, self-loops and duplicates.
    EdgeId add_edge(Vertex u, Vertex v);

    bool has_vertex(Vertex v) const { return v >= 0 && v < num_vertices(); }
    bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }
    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    std::span<const Incidence> incident(Vertex v) const { return adjacency_[v]; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }

    void check_vertex(Vertex v) const;

private:
    std::vector<std::vector<Incidence>> adjacency_;
    std::vector<Edge> edges_;
};

int max_degree(const Graph& g);

/// E(v, W): the edges joining v to members of w_set, each reported once,
/// in v's adjacency order.
std::vector<EdgeId> edges_incident_to_set(const Graph& g, Vertex v, std::span<const Vertex> w_set);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex. Isolated vertices form singleton components.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Subgraph induced by `vertices` with local ids 0..|vertices|-1 assigned in
/// the given order.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent_vertex;
    std::vector<EdgeId> to_parent_edge;
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

} // namespace linarb
