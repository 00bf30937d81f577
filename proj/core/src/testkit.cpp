#include "esbss/testkit.hpp"

#include <random>
#include <string>

#include "esbss/error.hpp"

namespace esbss::testkit {

namespace {

// Figure vertex labels are 1..12; ids here are label - 1.
constexpr Arc kBidirectedPairs[] = {
    {8, 9},  {9, 8},  {8, 1},  {1, 8},  {0, 9},   {9, 0},   {0, 4},   {4, 0},   {4, 6},
    {6, 4},  {6, 5},  {5, 6},  {7, 3},  {5, 7},   {7, 5},   {3, 7},   {4, 2},   {2, 4},
    {2, 1},  {1, 2},  {11, 3}, {3, 11}, {11, 10}, {10, 11}, {10, 4},  {4, 10},
};
constexpr Arc kArc2To10{1, 9};
constexpr Arc kArc6To10{5, 9};
constexpr Arc kArc2To4{1, 3};

constexpr std::size_t kFigureVertices = 12;

Fact figure(FactValue v) { return {std::move(v), Provenance::FigureCaption}; }
Fact derived(FactValue v) { return {std::move(v), Provenance::Derived}; }

}  // namespace

Fixture fig1(Fig1Variant variant) {
    std::vector<Arc> arcs(std::begin(kBidirectedPairs), std::end(kBidirectedPairs));
    Fixture fx;
    switch (variant) {
        case Fig1Variant::A:
            arcs.push_back(kArc2To10);
            arcs.push_back(kArc6To10);
            arcs.push_back(kArc2To4);
            fx.name = "fig1a";
            fx.expected["two_edge_sbc"] = figure(true);
            fx.expected["strongly_biconnected"] = figure(true);
            fx.expected["arc_count"] = figure(std::size_t{29});
            fx.expected["m2esbss_opt"] = figure(std::size_t{28});
            break;
        case Fig1Variant::B:
            fx.name = "fig1b";
            fx.expected["two_edge_sbc"] = figure(false);
            fx.expected["two_edge_connected"] = figure(true);
            fx.expected["strongly_biconnected"] = derived(false);
            fx.expected["arc_count"] = figure(std::size_t{26});
            fx.expected["cut_vertex"] = derived(std::size_t{4});
            fx.expected["sbcs"] =
                derived(std::vector<VertexSet>{{0, 1, 2, 4, 8, 9}, {3, 4, 5, 6, 7, 10, 11}});
            break;
        case Fig1Variant::C:
            arcs.push_back(kArc6To10);
            arcs.push_back(kArc2To4);
            fx.name = "fig1c";
            fx.expected["two_edge_sbc"] = figure(true);
            fx.expected["strongly_biconnected"] = figure(true);
            fx.expected["arc_count"] = figure(std::size_t{28});
            break;
    }
    fx.graph = Digraph(kFigureVertices, std::move(arcs));
    return fx;
}

Digraph generate(const GenSpec& spec) {
    const std::size_t n = spec.n;
    if (n < 3 || n > 65536) {
        throw RangeError("generator needs 3 <= n <= 65536, got n = " + std::to_string(n));
    }
    const std::size_t room = n * (n - 1) - 2 * n;
    if (spec.extra > room) {
        throw RangeError("extra = " + std::to_string(spec.extra) + " exceeds n(n-1)-2n = " +
                         std::to_string(room));
    }

    std::vector<Arc> arcs;
    arcs.reserve(2 * n + spec.extra);
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    for (Vertex v = 0; v < n; ++v) {
        const auto w = static_cast<Vertex>((v + 1) % n);
        arcs.push_back({v, w});
        arcs.push_back({w, v});
        used[v][w] = used[w][v] = true;
    }

    std::vector<Arc> pool;
    pool.reserve(room);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u != v && !used[u][v]) {
                pool.push_back({u, v});
            }
        }
    }

    // Partial Fisher-Yates driven by raw engine output, so the arc list is
    // identical on every standard library.
    std::mt19937_64 rng(spec.seed);
    for (std::size_t j = 0; j < spec.extra; ++j) {
        const std::size_t pick = j + static_cast<std::size_t>(rng() % (pool.size() - j));
        std::swap(pool[j], pool[pick]);
        arcs.push_back(pool[j]);
    }
    return Digraph(n, std::move(arcs));
}

}  // namespace esbss::testkit
