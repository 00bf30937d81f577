#pragma once

#include <cstdint>
#include <vector>

#include "esbss/digraph.hpp"

namespace esbss {

struct SccPartition {
    /// Component id of each vertex.
    std::vector<std::uint32_t> comp_of;
    /// Components ascending by their smallest vertex; each sorted.
    std::vector<VertexSet> components;

    [[nodiscard]] std::size_t count() const noexcept { return components.size(); }
};

/// Strongly connected components (iterative Tarjan).
[[nodiscard]] SccPartition sccs(const Digraph& g);

/// True iff n >= 1 and every vertex reaches every other.
[[nodiscard]] bool is_strongly_connected(const Digraph& g);

/// Strong connectivity of `g` with arc `skip` ignored, without copying `g`.
[[nodiscard]] bool is_strongly_connected_without(const Digraph& g, ArcId skip);

struct BlockDecomposition {
    /// Maximal biconnected pieces as sorted vertex sets, in lexicographic
    /// order. A bridge edge is a 2-vertex block; an isolated vertex is a
    /// singleton block.
    std::vector<VertexSet> blocks;
    /// Vertices that lie in two or more blocks.
    VertexSet cut_vertices;
};

[[nodiscard]] BlockDecomposition blocks(const UndirectedView& u);

/// Connected, at least three vertices, and no cut vertex.
[[nodiscard]] bool is_biconnected(const UndirectedView& u);

/// Arcs whose removal destroys strong connectivity, ascending.
///
/// Only arcs of a BFS out-tree and in-tree rooted at vertex 0 can qualify;
/// each of those is tested by deletion. Throws PreconditionError unless `g`
/// is strongly connected.
[[nodiscard]] ArcSet strong_bridges(const Digraph& g);

/// Strongly connected, n >= 2, and without strong bridges.
[[nodiscard]] bool is_two_edge_connected(const Digraph& g);

}  // namespace esbss
