#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace esbss {

/// Dense vertex id in `0..n-1`.
using Vertex = std::uint32_t;

/// Stable index of an arc in its graph's arc list.
struct ArcId {
    std::uint32_t value{};

    friend constexpr auto operator<=>(ArcId, ArcId) = default;
};

struct Arc {
    Vertex tail{};
    Vertex head{};

    friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

/// Ascending, duplicate-free list of arc ids.
using ArcSet = std::vector<ArcId>;
/// Ascending, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/// Immutable simple directed graph.
///
/// No self-loops and at most one arc per ordered pair; the antiparallel arcs
/// (u,v) and (v,u) are distinct. ArcId k always names the k-th arc passed to
/// the constructor.
class Digraph {
public:
    Digraph() = default;

    /// Throws RangeError on a self-loop, a duplicate arc or an endpoint >= n.
    Digraph(std::size_t n, std::vector<Arc> arcs);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return out_.size(); }
    [[nodiscard]] std::size_t arc_count() const noexcept { return arcs_.size(); }

    [[nodiscard]] std::span<const Arc> arcs() const noexcept { return arcs_; }
    [[nodiscard]] const Arc& arc(ArcId a) const { return arcs_.at(a.value); }

    [[nodiscard]] std::span<const ArcId> out_arcs(Vertex v) const { return out_.at(v); }
    [[nodiscard]] std::span<const ArcId> in_arcs(Vertex v) const { return in_.at(v); }
    [[nodiscard]] std::size_t out_degree(Vertex v) const { return out_.at(v).size(); }
    [[nodiscard]] std::size_t in_degree(Vertex v) const { return in_.at(v).size(); }

    [[nodiscard]] std::optional<ArcId> find_arc(Vertex tail, Vertex head) const;

    /// Copy without arc `a`; remaining arcs keep their relative order.
    /// Throws RangeError if `a` is out of range.
    [[nodiscard]] Digraph remove_arc(ArcId a) const;

    /// Copy with `a` appended as the last arc.
    [[nodiscard]] Digraph with_arc(Arc a) const;

    /// Spanning subgraph on the same vertices holding exactly `keep`, in the
    /// given order: arc k of the result is `keep[k]` of this graph.
    [[nodiscard]] Digraph spanning_subgraph(std::span<const ArcId> keep) const;

    /// Every arc id `0..m-1`.
    [[nodiscard]] ArcSet all_arcs() const;

    /// Equal vertex count and identical arc sequence.
    friend bool operator==(const Digraph& lhs, const Digraph& rhs) noexcept {
        return lhs.vertex_count() == rhs.vertex_count() && lhs.arcs_ == rhs.arcs_;
    }

private:
    std::vector<Arc> arcs_;
    std::vector<std::vector<ArcId>> out_;
    std::vector<std::vector<ArcId>> in_;
};

/// Same vertex count and the same arcs irrespective of order.
[[nodiscard]] bool same_arc_set(const Digraph& lhs, const Digraph& rhs);

/// Underlying undirected simple graph. Antiparallel arcs collapse to one edge.
struct UndirectedView {
    std::size_t n{};
    /// Pairs (u,v) with u < v, ascending and unique.
    std::vector<std::pair<Vertex, Vertex>> edges;

    [[nodiscard]] std::vector<std::vector<Vertex>> adjacency() const;

    friend bool operator==(const UndirectedView&, const UndirectedView&) = default;
};

[[nodiscard]] UndirectedView underlying(const Digraph& g);

struct InducedSubgraph {
    Digraph graph;
    /// original[k] is the vertex of the source graph relabeled to k.
    std::vector<Vertex> original;
};

/// Subgraph induced by `vertices`, relabeled densely in ascending order of
/// the original ids. Throws RangeError on an id >= n.
[[nodiscard]] InducedSubgraph induced(const Digraph& g, std::span<const Vertex> vertices);

}  // namespace esbss
