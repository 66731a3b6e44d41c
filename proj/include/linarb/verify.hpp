#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "linarb/forest_coloring.hpp"
#include "linarb/graph.hpp"

namespace linarb {

enum class ViolationKind {
    uncolored_edge,
    degree_overflow,
    monochromatic_cycle,
    unknown_edge,
    invalid_class,
    duplicate_edge,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    ClassId cls = kUncolored;     // offending class, when one applies
    std::vector<Vertex> vertices; // edge endpoints, the overloaded vertex, or the cycle
};

struct VerificationReport {
    bool valid = true;
    int class_count = 0;  // non-empty classes
    bool optimal = false; // valid and class_count == ceil(Δ/2)
    std::vector<Violation> violations;
};

/// An edge given by its endpoints, as read from a coloring file.
struct ColoredEdge {
    Vertex u;
    Vertex v;
    ClassId cls;
};

/// Checks that every edge carries a class in [0, t), that no vertex has
/// three edges of one class and that every class is acyclic. All
/// violations are reported. Shares no code with ForestColoring.
VerificationReport verify_partition(const Graph& g, std::span<const ClassId> edge_class, int t);

/// Same check for a list of endpoint-addressed colorings. Edges absent from
/// g are reported as unknown; an edge listed twice as duplicate.
VerificationReport verify_partition(const Graph& g, std::span<const ColoredEdge> coloring, int t);

} // namespace linarb
