#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linarb/graph.hpp"

namespace linarb {

/// 0-based class index; serialized formats print it 1-based.
using ClassId = int;
inline constexpr ClassId kUncolored = -1;

/// Snapshot of one color class: component id per vertex and the two end
/// vertices of each component. Isolated vertices are their own component
/// with both ends equal to the vertex. A component that is a cycle (only
/// possible transiently) has is_cycle set and no ends.
struct ColorClassView {
    ClassId cls = 0;
    std::vector<int> component;
    std::vector<std::pair<Vertex, Vertex>> ends;
    std::vector<char> is_cycle;
};

/// Mutable edge coloring with t classes over a fixed graph, keeping every
/// vertex at class-degree <= 2. Classes may hold cycles while a caller is
/// repairing them; acyclicity is the caller's responsibility.
///
/// The graph must outlive the coloring.
class ForestColoring {
public:
    ForestColoring(const Graph& g, int t);

    const Graph& graph() const { return *graph_; }
    int num_classes() const { return t_; }

    ClassId color_of(EdgeId e) const { return color_[e]; }
    int class_degree(Vertex v, ClassId j) const { return degree_[index(v, j)]; }
    int colored_degree(Vertex v) const { return colored_degree_[v]; }
    /// Number of classes in which v is internal (class-degree 2).
    int internal_count(Vertex v) const { return internal_count_[v]; }
    EdgeId num_colored() const { return num_colored_; }
    const std::vector<ClassId>& colors() const { return color_; }

    /// Colors an uncolored edge. Throws FeasibilityError if an endpoint
    /// already has two edges of class j; InputError if e is already colored.
    void assign(EdgeId e, ClassId j);
    /// Changes the class of a colored edge (same errors as assign).
    void recolor(EdgeId e, ClassId j);
    /// Exchanges the classes of two colored edges. State is unchanged if
    /// the result would overflow a class-degree.
    void swap_colors(EdgeId e1, EdgeId e2);

    /// True iff u and v lie in the same component of class j.
    bool would_close_cycle(ClassId j, Vertex u, Vertex v) const;
    /// True iff colored edge e lies on a cycle of its own class.
    bool on_monochromatic_cycle(EdgeId e) const;

    /// The maximal class-j path through v, from the end with the smaller id.
    /// If v lies on a class-j cycle the sequence starts at v, runs around
    /// the cycle and repeats v at the end. Throws InputError if v has no
    /// class-j edge.
    std::vector<Vertex> path_through(ClassId j, Vertex v) const;

    /// The class-j edge at v other than `except`, if any.
    std::optional<EdgeId> class_edge_at(Vertex v, ClassId j, EdgeId except = kNoEdge) const;

    ColorClassView class_view(ClassId j) const;

private:
    std::size_t index(Vertex v, ClassId j) const
    {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(t_) + static_cast<std::size_t>(j);
    }
    void check_class(ClassId j) const;
    void bump(Vertex v, ClassId j, int delta);
    /// Walks class j from `start` leaving through `first` until the path
    /// ends, `stop_at` is reached, or the walk returns to `start` (the only
    /// case that returns true). Visited vertices after `start` are appended
    /// to `visited` when given.
    bool walk(ClassId j, Vertex start, EdgeId first, std::vector<Vertex>* visited,
              Vertex stop_at = kNoVertex) const;

    const Graph* graph_;
    int t_;
    std::vector<ClassId> color_;
    std::vector<std::uint8_t> degree_;
    std::vector<int> colored_degree_;
    std::vector<int> internal_count_;
    EdgeId num_colored_ = 0;
};

struct ColorSets {
    std::vector<ClassId> c0;
    std::vector<ClassId> c1;
    std::vector<ClassId> c2;
};

/// Partition of the classes by v's class-degree, each list ascending.
ColorSets color_sets(const ForestColoring& fc, Vertex v);

} // namespace linarb
