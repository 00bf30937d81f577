#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "esbss/digraph.hpp"

namespace esbss::testkit {

enum class Provenance {
    FigureCaption,  // stated by the figure this fixture reproduces
    Derived,        // computed independently (brute force, enumeration)
};

using FactValue = std::variant<bool, std::size_t, std::vector<VertexSet>>;

struct Fact {
    FactValue value;
    Provenance provenance{};
};

/// A reference graph with the facts it is known to satisfy. Vertex ids are
/// 0-based; `label_base` maps them back to the figure's 1-based labels.
struct Fixture {
    std::string name;
    Digraph graph;
    std::map<std::string, Fact> expected;
    Vertex label_base{1};
};

enum class Fig1Variant { A, B, C };

/// The three 12-vertex example graphs: (a) a 2-edge strongly biconnected
/// graph with 29 arcs, (b) its 26-arc minimal 2-edge-connected subgraph
/// which is not strongly biconnected, (c) an optimal 28-arc 2-edge strongly
/// biconnected subgraph of (a).
///
/// Known fact names: "two_edge_sbc", "strongly_biconnected",
/// "two_edge_connected", "arc_count", "cut_vertex", "sbcs", "m2esbss_opt".
[[nodiscard]] Fixture fig1(Fig1Variant variant);

struct GenSpec {
    std::size_t n{};
    std::size_t extra{};
    std::uint64_t seed{};
};

/// Bidirected Hamiltonian cycle 0<->1<->...<->n-1<->0 followed by `extra`
/// distinct random arcs from a mt19937_64 stream seeded with `seed`. Always
/// 2-edge strongly biconnected. Throws RangeError unless 3 <= n <= 65536 and
/// extra <= n(n-1) - 2n.
[[nodiscard]] Digraph generate(const GenSpec& spec);

}  // namespace esbss::testkit
