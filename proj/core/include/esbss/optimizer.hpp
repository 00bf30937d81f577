#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "esbss/digraph.hpp"

namespace esbss {

/// Greedy minimal 2-edge-connected spanning subgraph.
///
/// Scans arcs in ascending id order and drops each one whose removal keeps
/// the remaining subgraph 2-edge-connected. The result is minimal: no single
/// arc of it can be dropped. Throws PreconditionError("input not
/// 2-edge-connected") if `g` is not 2-edge-connected.
[[nodiscard]] ArcSet minimal_two_ecss(const Digraph& g);

/// Called before each augmenting arc is added, with the subgraph being
/// repaired (arc k of `state` is the k-th arc of the working set, the
/// forbidden arc excluded) and the chosen arc of the full graph.
using AugmentObserver = std::function<void(const Digraph& state, const Arc& added)>;

/// Adds arcs of `g_full` to `current` until the underlying graph of
/// (V, current \ {forbidden}) is biconnected.
///
/// Each round picks the lowest-id arc outside `current` whose endpoints do
/// not share a strongly biconnected component of the working subgraph. Each
/// addition strictly lowers the component count, so at most n-1 rounds run.
/// `current` stays sorted. Returns the additions in order.
///
/// Throws PreconditionError if the working subgraph is not strongly
/// connected, and AugmentationStuck if no candidate arc is left while
/// biconnectivity still fails.
std::vector<ArcId> augment_to_biconnected(const Digraph& g_full, ArcSet& current,
                                          std::optional<ArcId> forbidden = std::nullopt,
                                          const AugmentObserver& observer = {});

/// Full record of one approximation run.
struct ApproxTrace {
    std::size_t n{};
    std::size_t m{};
    /// Minimal 2-edge-connected spanning subgraph found first.
    ArcSet minimal_2ecss;
    /// True when that subgraph was already 2-edge strongly biconnected.
    bool early_exit{};
    /// Arcs added to make the underlying graph biconnected.
    std::vector<ArcId> phase1_added;
    /// b-bridges of the subgraph after the first augmentation, ascending.
    std::vector<ArcId> bbridges_found;
    /// Per b-bridge, the arcs added to repair the subgraph without it.
    std::vector<std::pair<ArcId, std::vector<ArcId>>> per_bridge_added;
    /// Final arc set, ascending.
    ArcSet result;

    [[nodiscard]] std::size_t bridge_count() const noexcept { return bbridges_found.size(); }
    /// i(n-1) + 5n with i the number of b-bridges found.
    [[nodiscard]] std::size_t upper_bound() const noexcept {
        return bridge_count() * (n - 1) + 5 * n;
    }
    /// 2n: every 2-edge strongly biconnected spanning subgraph has at least this many arcs.
    [[nodiscard]] std::size_t lower_bound() const noexcept { return 2 * n; }

    friend bool operator==(const ApproxTrace&, const ApproxTrace&) = default;
};

/// Approximates a minimum 2-edge strongly biconnected spanning subgraph.
///
/// Throws PreconditionError if `g` is not 2-edge strongly biconnected,
/// AugmentationStuck if a repair loop runs dry, and InvariantError if the
/// final subgraph fails the 2-edge-strong-biconnectivity check.
[[nodiscard]] ApproxTrace approx_m2esbss(const Digraph& g, const AugmentObserver& observer = {});

struct BoundReport {
    std::size_t size{};
    std::size_t m{};
    std::size_t lower_bound{};
    std::size_t upper_bound{};
    std::size_t bridge_count{};
    /// (5 + i) / 2.
    double ratio_upper{};
};

/// Size against the 2n floor and the i(n-1)+5n ceiling. Throws
/// InvariantError unless lower_bound <= size <= min(m, upper_bound).
[[nodiscard]] BoundReport bound_report(const ApproxTrace& trace);

}  // namespace esbss
