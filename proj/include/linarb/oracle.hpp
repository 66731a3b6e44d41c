#pragma once

#include <cstdint>
#include <vector>

#include "linarb/forest_coloring.hpp"
#include "linarb/graph.hpp"

namespace linarb {

enum class OracleStatus { exact, indeterminate };

/// Exhaustive-search answer. When the node budget runs out the status is
/// indeterminate, `la` holds the smallest class count not yet refuted and
/// the witness is empty.
struct OracleResult {
    OracleStatus status = OracleStatus::exact;
    int la = 0;
    std::vector<ClassId> witness;
    std::int64_t nodes_explored = 0;
};

inline constexpr std::int64_t kDefaultOracleBudget = 50'000'000;

/// Exact linear arboricity by backtracking, trying t = ceil(Δ/2), ceil(Δ/2)+1, ...
/// Exponential; intended for graphs with about 20 edges or fewer.
OracleResult exact_la(const Graph& g, std::int64_t budget = kDefaultOracleBudget);

enum class BoundStatus { proven, conjectured };

struct LaBounds {
    int lower = 0;
    int upper = 0;
    BoundStatus upper_status = BoundStatus::proven;
};

/// lower = ceil(Δ/2), raised to ceil((Δ+1)/2) when some component is
/// Δ-regular with Δ even; upper = ceil((Δ+1)/2), proven when Δ <= 6,
/// Δ in {8, 10}, or g is planar.
LaBounds la_bounds(const Graph& g);

bool is_planar(const Graph& g);

} // namespace linarb
