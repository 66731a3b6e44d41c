#pragma once

#include <span>
#include <vector>

#include "linarb/degeneracy.hpp"
#include "linarb/graph.hpp"

namespace linarb {

/// Mutually disjoint representative sets R*(v) ⊆ N_R(v), |R*(v)| = r, one
/// per high-degree vertex v (degree >= d). Vertices outside the high set
/// have an empty representative set.
struct SdrAssignment {
    int r = 0;
    std::vector<Vertex> high_set;                // sorted by id
    std::vector<std::vector<Vertex>> reps;       // parallel to high_set, each sorted by id
    std::vector<int> high_index;                 // vertex -> index into high_set, or -1
    std::vector<Vertex> owner;                   // representative -> its high vertex, or kNoVertex

    bool is_high(Vertex v) const { return high_index[v] >= 0; }
    std::span<const Vertex> representatives_of(Vertex v) const;
};

/// Number of representatives per high vertex: floor((d - k) / k).
int sdr_size(int d, int k);

/// Builds an r-SDR of {N_R(v) : deg(v) >= d} via a b-matching max flow.
/// Requires 1 <= ord.k <= d <= max_degree(g) (InputError otherwise).
/// Throws InternalContradiction if the flow cannot saturate every high
/// vertex, which the counting argument (each vertex lies in at most k of the
/// sets N_R) rules out for a valid ordering.
SdrAssignment compute_sdr(const Graph& g, const DegeneracyOrdering& ord, int d);

/// Spot-checks the Hall-type condition |∪_{v in S} N_R(v)| >= r |S| on each
/// sampled S. Every sampled vertex must have degree >= d.
bool hall_certificate_check(const Graph& g, const DegeneracyOrdering& ord, int d,
                            std::span<const std::vector<Vertex>> sample_sets);

/// Exhaustive Hall check over all subsets of the high set; limited to high
/// sets of at most 20 vertices.
bool hall_full_check(const Graph& g, const DegeneracyOrdering& ord, int d);

} // namespace linarb
