#include "esbss/optimizer.hpp"

#include <algorithm>
#include <string>

#include "esbss/connectivity.hpp"
#include "esbss/error.hpp"
#include "esbss/strong_biconnectivity.hpp"

namespace esbss {

namespace {

ArcSet without(const ArcSet& set, std::optional<ArcId> drop) {
    if (!drop) {
        return set;
    }
    ArcSet out;
    out.reserve(set.size());
    std::ranges::copy_if(set, std::back_inserter(out), [&](ArcId a) { return a != *drop; });
    return out;
}

void insert_sorted(ArcSet& set, ArcId a) { set.insert(std::ranges::lower_bound(set, a), a); }

}  // namespace

ArcSet minimal_two_ecss(const Digraph& g) {
    if (!is_two_edge_connected(g)) {
        throw PreconditionError("input not 2-edge-connected");
    }
    const std::size_t n = g.vertex_count();
    std::vector<bool> kept(g.arc_count(), true);
    std::vector<std::size_t> out_deg(n);
    std::vector<std::size_t> in_deg(n);
    for (Vertex v = 0; v < n; ++v) {
        out_deg[v] = g.out_degree(v);
        in_deg[v] = g.in_degree(v);
    }

    for (ArcId a : g.all_arcs()) {
        const Arc& arc = g.arc(a);
        // A vertex left with a single out- or in-arc makes that arc a strong bridge.
        if (out_deg[arc.tail] <= 2 || in_deg[arc.head] <= 2) {
            continue;
        }
        ArcSet trial;
        for (std::uint32_t k = 0; k < kept.size(); ++k) {
            if (kept[k] && k != a.value) {
                trial.push_back(ArcId{k});
            }
        }
        if (is_two_edge_connected(g.spanning_subgraph(trial))) {
            kept[a.value] = false;
            --out_deg[arc.tail];
            --in_deg[arc.head];
        }
    }

    ArcSet result;
    for (std::uint32_t k = 0; k < kept.size(); ++k) {
        if (kept[k]) {
            result.push_back(ArcId{k});
        }
    }
    return result;
}

std::vector<ArcId> augment_to_biconnected(const Digraph& g_full, ArcSet& current,
                                          std::optional<ArcId> forbidden,
                                          const AugmentObserver& observer) {
    std::vector<ArcId> added;
    while (true) {
        const Digraph state = g_full.spanning_subgraph(without(current, forbidden));
        if (!is_strongly_connected(state)) {
            throw PreconditionError("augmentation requires a strongly connected subgraph");
        }
        if (is_biconnected(underlying(state))) {
            return added;
        }

        const auto components = sbcs(state);
        std::optional<ArcId> pick;
        for (ArcId a : g_full.all_arcs()) {
            if (std::ranges::binary_search(current, a) || (forbidden && a == *forbidden)) {
                continue;
            }
            const Arc& arc = g_full.arc(a);
            if (!components.same_component(arc.tail, arc.head)) {
                pick = a;
                break;
            }
        }
        if (!pick) {
            throw AugmentationStuck("augmentation stuck: no arc joins two strongly biconnected "
                                    "components (" +
                                    std::to_string(components.count()) + " remain)");
        }
        if (observer) {
            observer(state, g_full.arc(*pick));
        }
        insert_sorted(current, *pick);
        added.push_back(*pick);
    }
}

ApproxTrace approx_m2esbss(const Digraph& g, const AugmentObserver& observer) {
    const auto input_check = is_two_edge_strongly_biconnected(g);
    if (!input_check.two_edge_sbc) {
        throw PreconditionError("input is not 2-edge strongly biconnected (" +
                                describe(*input_check.witness, g) + ")");
    }

    ApproxTrace trace;
    trace.n = g.vertex_count();
    trace.m = g.arc_count();
    trace.minimal_2ecss = minimal_two_ecss(g);

    if (is_two_edge_strongly_biconnected(g.spanning_subgraph(trace.minimal_2ecss)).two_edge_sbc) {
        trace.early_exit = true;
        trace.result = trace.minimal_2ecss;
        return trace;
    }

    ArcSet current = trace.minimal_2ecss;
    trace.phase1_added = augment_to_biconnected(g, current, std::nullopt, observer);

    // b-bridges are computed once on this subgraph; later repairs only add arcs.
    for (ArcId local : b_bridges(g.spanning_subgraph(current))) {
        trace.bbridges_found.push_back(current[local.value]);
    }
    for (ArcId bridge : trace.bbridges_found) {
        auto additions = augment_to_biconnected(g, current, bridge, observer);
        trace.per_bridge_added.emplace_back(bridge, std::move(additions));
    }

    trace.result = std::move(current);
    const auto final_check = is_two_edge_strongly_biconnected(g.spanning_subgraph(trace.result));
    if (!final_check.two_edge_sbc) {
        throw InvariantError("output is not 2-edge strongly biconnected (" +
                             describe(*final_check.witness, g.spanning_subgraph(trace.result)) +
                             ")");
    }
    return trace;
}

BoundReport bound_report(const ApproxTrace& trace) {
    BoundReport report;
    report.size = trace.result.size();
    report.m = trace.m;
    report.lower_bound = trace.lower_bound();
    report.upper_bound = trace.upper_bound();
    report.bridge_count = trace.bridge_count();
    report.ratio_upper = (5.0 + static_cast<double>(trace.bridge_count())) / 2.0;
    if (report.size < report.lower_bound || report.size > std::min(report.m, report.upper_bound)) {
        throw InvariantError("size " + std::to_string(report.size) + " outside [" +
                             std::to_string(report.lower_bound) + ", min(" +
                             std::to_string(report.m) + ", " + std::to_string(report.upper_bound) +
                             ")]");
    }
    return report;
}

}  // namespace esbss
