#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "esbss/digraph.hpp"

namespace esbss {

/// Parses the edge-list format:
///
///     # comment
///     n 12          (optional, first content line only)
///     0 1
///     1 0
///
/// Ids are 0-based decimals. Without a header the vertex count is
/// 1 + the largest id seen. Arc order follows line order. Throws ParseError
/// naming the offending line.
[[nodiscard]] Digraph parse_edge_list(std::string_view text);

/// Reads and parses a file. Throws ParseError if it cannot be opened.
[[nodiscard]] Digraph read_edge_list_file(const std::filesystem::path& path);

/// Serializes with an `n <N>` header so isolated vertices survive a round trip.
[[nodiscard]] std::string write_edge_list(const Digraph& g);

/// Renders a DOT digraph. Arcs listed in `highlight` are drawn bold red.
/// `label_base` is added to every vertex id in node names.
[[nodiscard]] std::string to_dot(const Digraph& g, std::span<const ArcId> highlight = {},
                                 Vertex label_base = 0);

}  // namespace esbss
