#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linarb/forest_coloring.hpp"
#include "linarb/graph.hpp"
#include "linarb/verify.hpp"

namespace linarb {

/// Native grammar, one item per line:
///   "p <n> <m>"   optional header, before any edge
///   "<u> <v>"     edge, 0-based ids
///   "# ..."       comment (also trailing), blank lines ignored
/// With `one_based` set, DIMACS-style input is accepted instead: ids are
/// 1-based, edges may be written "e <u> <v>", the header may be
/// "p <word> <n> <m>" and lines starting with "c" are comments.
/// Without a header the vertex count is max id + 1. Throws ParseError.
Graph parse_edge_list(std::string_view text, bool one_based = false);

/// Header plus edges in increasing (u, v) order; round-trips through
/// parse_edge_list.
std::string format_edge_list(const Graph& g);

/// Lines "u v c" with 0-based vertices and 1-based classes c >= 1.
std::vector<ColoredEdge> parse_coloring(std::string_view text);

/// One line "u v c" per edge, sorted by (u, v), classes printed 1-based.
std::string format_coloring(const Graph& g, std::span<const ClassId> edge_class);

/// Whole file, or standard input for "-". Throws InputError.
std::string read_text(const std::string& path);

} // namespace linarb
