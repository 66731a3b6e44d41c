#pragma once

#include <cstdint>

#include "linarb/graph.hpp"

namespace linarb {

/// Random graph whose identity order 0..n-1 is k-degenerate by
/// construction: vertex i joins min(k, i) distinct earlier vertices chosen
/// uniformly (among those below `max_degree`, when that cap is positive).
/// If the maximum degree is still below delta_min, the last p vertices are
/// turned into pendants of the core's max-degree vertex, with p the
/// smallest count that reaches delta_min. Throws InputError when n < 1,
/// k < 1, delta_min > n-1 or delta_min exceeds the cap.
Graph generate_k_degenerate(Vertex n, int k, int delta_min, std::uint64_t seed, int max_degree = 0);

/// Random k-tree: K_{k+1} grown by attaching each new vertex to a
/// uniformly chosen existing k-clique.
Graph random_k_tree(Vertex n, int k, std::uint64_t seed);

/// m distinct edges drawn uniformly on n vertices.
Graph random_gnm(Vertex n, long m, std::uint64_t seed);

Graph complete_graph(Vertex n);
Graph star_graph(Vertex leaves);  // centre is vertex 0
Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);

} // namespace linarb
