#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "esbss/digraph.hpp"

namespace esbss {

/// Strongly biconnected components: for each strongly connected component,
/// the blocks of the underlying graph of the subgraph it induces.
struct SbcDecomposition {
    /// Sorted vertex sets in lexicographic order. Components overlap only at
    /// cut vertices of their SCC.
    std::vector<VertexSet> components;
    /// Indices into `components` containing each vertex, ascending.
    std::vector<std::vector<std::uint32_t>> membership;

    [[nodiscard]] std::size_t count() const noexcept { return components.size(); }
    [[nodiscard]] bool same_component(Vertex v, Vertex w) const;
};

[[nodiscard]] SbcDecomposition sbcs(const Digraph& g);

/// Strongly connected with a biconnected underlying graph (so n >= 3).
[[nodiscard]] bool is_strongly_biconnected(const Digraph& g);

/// Arcs whose removal leaves a graph that is not strongly biconnected,
/// ascending. Throws PreconditionError unless `g` is strongly biconnected.
[[nodiscard]] ArcSet b_bridges(const Digraph& g);

enum class WitnessKind {
    TooFewVertices,        // n < 3
    NotStronglyConnected,  // `vertex` is not mutually reachable with vertex 0
    CutVertex,             // `vertex` is a cut vertex of the underlying graph
    StrongBridge,          // `arc` is a b-bridge that is also a strong bridge
    BBridge,               // `arc` is a b-bridge whose removal only breaks biconnectivity
};

struct Witness {
    WitnessKind kind{};
    std::optional<Vertex> vertex;
    std::optional<ArcId> arc;
};

/// Outcome of the full 2-edge-strong-biconnectivity test. `witness` carries
/// the first failing evidence in the order: vertex count, strong
/// connectivity, cut vertex, b-bridge.
struct SbcCheckReport {
    bool strongly_connected{};
    bool underlying_biconnected{};
    bool strongly_biconnected{};
    bool two_edge_sbc{};
    std::optional<Witness> witness;
};

[[nodiscard]] SbcCheckReport is_two_edge_strongly_biconnected(const Digraph& g);

/// Human-readable witness, e.g. "cut vertex 5". Vertex ids are shifted by
/// `label_base`.
[[nodiscard]] std::string describe(const Witness& w, const Digraph& g, Vertex label_base = 0);

/// True iff removing any set of fewer than `k` arcs leaves a strongly
/// biconnected graph. Enumerates every such set; `k` must be in 1..3,
/// otherwise RangeError.
[[nodiscard]] bool k_edge_sbc_check(const Digraph& g, int k);

}  // namespace esbss
