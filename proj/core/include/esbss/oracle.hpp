#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "esbss/digraph.hpp"
#include "esbss/error.hpp"
#include "esbss/strong_biconnectivity.hpp"

// Ground-truth routines for small graphs. Nothing here calls into the
// connectivity or strong-biconnectivity modules: reachability, articulation
// and block structure are recomputed from adjacency matrices by brute force.

namespace esbss::oracle {

struct ExactResult {
    std::size_t opt_size{};
    /// Lexicographically first feasible subset of size `opt_size`.
    ArcSet witness;
    /// Feasibility checks performed, including the initial one on all arcs.
    std::uint64_t explored{};
    /// Subsets of size opt_size - 1 checked, all infeasible.
    std::uint64_t certified_checks{};
};

/// Thrown when the exact search hits its check budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t best_upper_bound, ArcSet best)
        : Error("budget exceeded; best known upper bound " + std::to_string(best_upper_bound)),
          best_upper_bound_(best_upper_bound),
          best_(std::move(best)) {}

    [[nodiscard]] std::size_t best_upper_bound() const noexcept { return best_upper_bound_; }
    [[nodiscard]] const ArcSet& best() const noexcept { return best_; }

private:
    std::size_t best_upper_bound_;
    ArcSet best_;
};

/// Definition-level check that (V, s) is 2-edge strongly biconnected: n >= 3,
/// strongly connected, biconnected underlying graph, and both properties
/// survive the removal of any one arc of `s`.
[[nodiscard]] bool brute_feasible(const Digraph& g, std::span<const ArcId> s);

/// Minimum 2-edge strongly biconnected spanning subgraph by exhaustive search.
///
/// Feasibility is monotone under adding arcs, so the search walks sizes
/// downward from m-1, taking the first feasible subset in lexicographic order
/// at each size, and stops at the first size with none. Throws
/// PreconditionError if `g` itself is infeasible and BudgetExceeded once
/// `budget` checks are spent.
[[nodiscard]] ExactResult exact_m2esbss(const Digraph& g, std::uint64_t budget);

/// Strongly biconnected components via transitive closure and per-vertex
/// deletion tests. Limited to n <= 12 (RangeError otherwise).
[[nodiscard]] SbcDecomposition brute_sbcs(const Digraph& g);

}  // namespace esbss::oracle
