#pragma once

#include <vector>

#include "linarb/graph.hpp"

namespace linarb {

/// Vertex ordering v_1..v_n (stored 0-based) together with the left-degree
/// bound k it certifies: every vertex has at most k neighbours earlier in
/// `order`.
struct DegeneracyOrdering {
    std::vector<Vertex> order;
    std::vector<int> position;  // inverse of order
    int k = 0;

    bool before(Vertex a, Vertex b) const { return position[a] < position[b]; }
};

/// Smallest-last ordering: repeatedly remove a minimum-degree vertex (ties
/// by smallest id) and reverse the removal sequence. `k` is the exact
/// degeneracy.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

/// Wraps an explicit permutation; `k` is set to the largest left-degree.
/// Throws InputError if `order` is not a permutation of V(g).
DegeneracyOrdering ordering_from_sequence(const Graph& g, std::vector<Vertex> order);

int left_degree(const Graph& g, const DegeneracyOrdering& ord, Vertex v);

/// True iff every vertex has at most k neighbours earlier in `ord`.
bool verify_ordering(const Graph& g, const DegeneracyOrdering& ord, int k);

struct NeighborSplit {
    std::vector<Vertex> left;   // N_L(v), sorted by id
    std::vector<Vertex> right;  // N_R(v), sorted by id
};

NeighborSplit left_right_neighbors(const Graph& g, const DegeneracyOrdering& ord, Vertex v);

} // namespace linarb
