#include "esbss/strong_biconnectivity.hpp"

#include <algorithm>

#include "esbss/connectivity.hpp"
#include "esbss/error.hpp"

namespace esbss {

bool SbcDecomposition::same_component(Vertex v, Vertex w) const {
    const auto& a = membership.at(v);
    const auto& b = membership.at(w);
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) {
            return true;
        }
        *i < *j ? ++i : ++j;
    }
    return false;
}

SbcDecomposition sbcs(const Digraph& g) {
    SbcDecomposition out;
    for (const VertexSet& scc : sccs(g).components) {
        const auto sub = induced(g, scc);
        for (const VertexSet& block : blocks(underlying(sub.graph)).blocks) {
            VertexSet mapped;
            mapped.reserve(block.size());
            for (Vertex local : block) {
                mapped.push_back(sub.original[local]);
            }
            std::ranges::sort(mapped);
            out.components.push_back(std::move(mapped));
        }
    }
    std::ranges::sort(out.components);

    out.membership.assign(g.vertex_count(), {});
    for (std::uint32_t c = 0; c < out.components.size(); ++c) {
        for (Vertex v : out.components[c]) {
            out.membership[v].push_back(c);
        }
    }
    return out;
}

bool is_strongly_biconnected(const Digraph& g) {
    return is_strongly_connected(g) && is_biconnected(underlying(g));
}

namespace {

// Whether removing `a` from a strongly biconnected `g` keeps it so.
bool survives_removal(const Digraph& g, ArcId a) {
    if (!is_strongly_connected_without(g, a)) {
        return false;
    }
    const Arc& arc = g.arc(a);
    if (g.find_arc(arc.head, arc.tail)) {
        // The antiparallel partner keeps the underlying graph unchanged.
        return true;
    }
    return is_biconnected(underlying(g.remove_arc(a)));
}

}  // namespace

ArcSet b_bridges(const Digraph& g) {
    if (!is_strongly_biconnected(g)) {
        throw PreconditionError("graph not strongly biconnected");
    }
    ArcSet bridges;
    for (ArcId a : g.all_arcs()) {
        if (!survives_removal(g, a)) {
            bridges.push_back(a);
        }
    }
    return bridges;
}

SbcCheckReport is_two_edge_strongly_biconnected(const Digraph& g) {
    SbcCheckReport report;
    const std::size_t n = g.vertex_count();
    report.strongly_connected = is_strongly_connected(g);
    const auto view = underlying(g);
    report.underlying_biconnected = is_biconnected(view);
    report.strongly_biconnected = report.strongly_connected && report.underlying_biconnected;

    if (n < 3) {
        report.witness = Witness{WitnessKind::TooFewVertices, std::nullopt, std::nullopt};
        return report;
    }
    if (!report.strongly_connected) {
        const auto part = sccs(g);
        for (Vertex v = 1; v < n; ++v) {
            if (part.comp_of[v] != part.comp_of[0]) {
                report.witness = Witness{WitnessKind::NotStronglyConnected, v, std::nullopt};
                break;
            }
        }
        return report;
    }
    if (!report.underlying_biconnected) {
        const auto cuts = blocks(view).cut_vertices;
        // Strongly connected with n >= 3, so the underlying graph is connected
        // and failing biconnectivity means a cut vertex exists.
        if (cuts.empty()) {
            throw InvariantError("connected non-biconnected graph without a cut vertex");
        }
        report.witness = Witness{WitnessKind::CutVertex, cuts.front(), std::nullopt};
        return report;
    }
    for (ArcId a : g.all_arcs()) {
        if (!survives_removal(g, a)) {
            const auto kind = is_strongly_connected_without(g, a) ? WitnessKind::BBridge
                                                                  : WitnessKind::StrongBridge;
            report.witness = Witness{kind, std::nullopt, a};
            return report;
        }
    }
    report.two_edge_sbc = true;
    return report;
}

std::string describe(const Witness& w, const Digraph& g, Vertex label_base) {
    auto arc_text = [&](ArcId a) {
        const Arc& arc = g.arc(a);
        return "(" + std::to_string(arc.tail + label_base) + ", " +
               std::to_string(arc.head + label_base) + ")";
    };
    switch (w.kind) {
        case WitnessKind::TooFewVertices:
            return "n<3";
        case WitnessKind::NotStronglyConnected:
            return "vertex " + std::to_string(*w.vertex + label_base) + " not strongly connected to " +
                   std::to_string(label_base);
        case WitnessKind::CutVertex:
            return "cut vertex " + std::to_string(*w.vertex + label_base);
        case WitnessKind::StrongBridge:
            return "strong bridge " + arc_text(*w.arc);
        case WitnessKind::BBridge:
            return "b-bridge " + arc_text(*w.arc);
    }
    return {};
}

bool k_edge_sbc_check(const Digraph& g, int k) {
    if (k < 1 || k > 3) {
        throw RangeError("k must be in 1..3, got " + std::to_string(k));
    }
    const std::size_t m = g.arc_count();
    auto holds_without = [&](std::initializer_list<std::size_t> removed) {
        ArcSet keep;
        keep.reserve(m);
        for (std::uint32_t a = 0; a < m; ++a) {
            if (std::find(removed.begin(), removed.end(), a) == removed.end()) {
                keep.push_back(ArcId{a});
            }
        }
        return is_strongly_biconnected(g.spanning_subgraph(keep));
    };

    if (!is_strongly_biconnected(g)) {
        return false;
    }
    if (k >= 2) {
        for (std::size_t a = 0; a < m; ++a) {
            if (!holds_without({a})) {
                return false;
            }
        }
    }
    if (k >= 3) {
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                if (!holds_without({a, b})) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace esbss
