#include "esbss/digraph.hpp"

#include <algorithm>
#include <string>

#include "esbss/error.hpp"

namespace esbss {

namespace {

std::string describe(const Arc& a) {
    return "(" + std::to_string(a.tail) + ", " + std::to_string(a.head) + ")";
}

}  // namespace

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs) : arcs_(std::move(arcs)), out_(n), in_(n) {
    for (std::uint32_t k = 0; k < arcs_.size(); ++k) {
        const Arc& a = arcs_[k];
        if (a.tail >= n || a.head >= n) {
            throw RangeError("arc " + describe(a) + " has an endpoint >= n = " + std::to_string(n));
        }
        if (a.tail == a.head) {
            throw RangeError("self-loop " + describe(a));
        }
        for (ArcId other : out_[a.tail]) {
            if (arcs_[other.value].head == a.head) {
                throw RangeError("duplicate arc " + describe(a));
            }
        }
        out_[a.tail].push_back(ArcId{k});
        in_[a.head].push_back(ArcId{k});
    }
}

std::optional<ArcId> Digraph::find_arc(Vertex tail, Vertex head) const {
    if (tail >= vertex_count()) {
        return std::nullopt;
    }
    for (ArcId a : out_[tail]) {
        if (arcs_[a.value].head == head) {
            return a;
        }
    }
    return std::nullopt;
}

Digraph Digraph::remove_arc(ArcId a) const {
    if (a.value >= arcs_.size()) {
        throw RangeError("arc id " + std::to_string(a.value) + " out of range for m = " +
                         std::to_string(arcs_.size()));
    }
    std::vector<Arc> rest;
    rest.reserve(arcs_.size() - 1);
    for (std::size_t k = 0; k < arcs_.size(); ++k) {
        if (k != a.value) {
            rest.push_back(arcs_[k]);
        }
    }
    return Digraph(vertex_count(), std::move(rest));
}

Digraph Digraph::with_arc(Arc a) const {
    auto arcs = arcs_;
    arcs.push_back(a);
    return Digraph(vertex_count(), std::move(arcs));
}

Digraph Digraph::spanning_subgraph(std::span<const ArcId> keep) const {
    std::vector<Arc> arcs;
    arcs.reserve(keep.size());
    for (ArcId a : keep) {
        arcs.push_back(arc(a));
    }
    return Digraph(vertex_count(), std::move(arcs));
}

ArcSet Digraph::all_arcs() const {
    ArcSet ids(arcs_.size());
    for (std::uint32_t k = 0; k < ids.size(); ++k) {
        ids[k] = ArcId{k};
    }
    return ids;
}

bool same_arc_set(const Digraph& lhs, const Digraph& rhs) {
    if (lhs.vertex_count() != rhs.vertex_count() || lhs.arc_count() != rhs.arc_count()) {
        return false;
    }
    std::vector<Arc> a(lhs.arcs().begin(), lhs.arcs().end());
    std::vector<Arc> b(rhs.arcs().begin(), rhs.arcs().end());
    std::ranges::sort(a);
    std::ranges::sort(b);
    return a == b;
}

std::vector<std::vector<Vertex>> UndirectedView::adjacency() const {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

UndirectedView underlying(const Digraph& g) {
    UndirectedView view{g.vertex_count(), {}};
    view.edges.reserve(g.arc_count());
    for (const Arc& a : g.arcs()) {
        view.edges.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
    }
    std::ranges::sort(view.edges);
    auto dup = std::ranges::unique(view.edges);
    view.edges.erase(dup.begin(), dup.end());
    return view;
}

InducedSubgraph induced(const Digraph& g, std::span<const Vertex> vertices) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> original(vertices.begin(), vertices.end());
    std::ranges::sort(original);
    original.erase(std::ranges::unique(original).begin(), original.end());

    constexpr Vertex absent = ~Vertex{0};
    std::vector<Vertex> relabel(n, absent);
    for (std::size_t k = 0; k < original.size(); ++k) {
        if (original[k] >= n) {
            throw RangeError("vertex " + std::to_string(original[k]) + " out of range for n = " +
                             std::to_string(n));
        }
        relabel[original[k]] = static_cast<Vertex>(k);
    }

    std::vector<Arc> arcs;
    for (const Arc& a : g.arcs()) {
        if (relabel[a.tail] != absent && relabel[a.head] != absent) {
            arcs.push_back({relabel[a.tail], relabel[a.head]});
        }
    }
    return {Digraph(original.size(), std::move(arcs)), std::move(original)};
}

}  // namespace esbss
