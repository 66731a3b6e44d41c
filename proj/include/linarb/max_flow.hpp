#pragma once

#include <cstdint>
#include <vector>

namespace linarb {

/// Dinic max flow with integer capacities. Arcs are explored in insertion
/// order, so results are deterministic for a fixed construction sequence.
/// The blocking-flow search is iterative; deep residual paths do not grow
/// the call stack.
class MaxFlow {
public:
    explicit MaxFlow(int num_nodes);

    void reserve_arcs(std::size_t count);
    /// Adds arc from -> to; returns an id usable with flow_on().
    int add_arc(int from, int to, std::int64_t capacity);

    std::int64_t solve(int source, int sink);

    std::int64_t flow_on(int arc_id) const;
    int num_nodes() const { return static_cast<int>(first_.size()); }

private:
    struct Arc {
        int to;
        int next;  // next arc out of the same node
        std::int64_t residual;  // on a reverse arc: the flow on its forward arc
    };

    bool build_levels(int source, int sink);
    std::int64_t augment(int source, int sink);

    std::vector<Arc> arcs_;
    std::vector<int> first_;
    std::vector<int> last_;
    std::vector<int> level_;
    std::vector<int> cursor_;
};

} // namespace linarb
