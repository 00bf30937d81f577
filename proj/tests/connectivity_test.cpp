#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "esbss/connectivity.hpp"
#include "esbss/error.hpp"
#include "esbss/testkit.hpp"
#include "test_graphs.hpp"

namespace esbss {
namespace {

using testkit::Fig1Variant;
using testkit::fig1;

UndirectedView make_view(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
    }
    std::ranges::sort(edges);
    return {n, std::move(edges)};
}

// Number of connected components of `u` after deleting `gone` (n for none).
std::size_t components_without(const UndirectedView& u, std::size_t gone) {
    const auto adj = u.adjacency();
    std::vector<bool> seen(u.n, false);
    std::size_t count = 0;
    for (std::size_t s = 0; s < u.n; ++s) {
        if (s == gone || seen[s]) continue;
        ++count;
        std::vector<std::size_t> todo{s};
        seen[s] = true;
        while (!todo.empty()) {
            const auto v = todo.back();
            todo.pop_back();
            for (Vertex w : adj[v]) {
                if (w != gone && !seen[w]) {
                    seen[w] = true;
                    todo.push_back(w);
                }
            }
        }
    }
    return count;
}

VertexSet brute_cut_vertices(const UndirectedView& u) {
    VertexSet cuts;
    const std::size_t base = components_without(u, u.n);
    for (Vertex x = 0; x < u.n; ++x) {
        const bool isolated = u.adjacency()[x].empty();
        if (!isolated && components_without(u, x) > base) {
            cuts.push_back(x);
        }
    }
    return cuts;
}

TEST(Sccs, DirectedTriangleIsOneComponent) {
    const auto part = sccs(test::directed_cycle(3));
    ASSERT_EQ(part.count(), 1u);
    EXPECT_EQ(part.components[0], (VertexSet{0, 1, 2}));
}

TEST(Sccs, TwoComponentsNumberedBySmallestVertex) {
    const auto part = sccs(Digraph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}}));
    ASSERT_EQ(part.count(), 2u);
    EXPECT_EQ(part.components[0], (VertexSet{0, 1}));
    EXPECT_EQ(part.components[1], (VertexSet{2, 3}));
    EXPECT_EQ(part.comp_of, (std::vector<std::uint32_t>{0, 0, 1, 1}));

    const auto reversed = sccs(Digraph(4, {{3, 2}, {2, 3}, {2, 1}, {1, 0}, {0, 1}}));
    EXPECT_EQ(reversed.components, part.components);
}

TEST(Sccs, FigureAIsStronglyConnected) {
    const auto part = sccs(fig1(Fig1Variant::A).graph);
    ASSERT_EQ(part.count(), 1u);
    EXPECT_EQ(part.components[0].size(), 12u);
}

TEST(StronglyConnected, EdgeCases) {
    EXPECT_TRUE(is_strongly_connected(Digraph(1, {})));
    EXPECT_FALSE(is_strongly_connected(Digraph(0, {})));
    EXPECT_FALSE(is_strongly_connected(Digraph(2, {{0, 1}})));
    EXPECT_TRUE(is_strongly_connected(fig1(Fig1Variant::B).graph));
}

TEST(StronglyConnected, WithoutArcMatchesRemoval) {
    const Digraph g = fig1(Fig1Variant::A).graph;
    for (ArcId a : g.all_arcs()) {
        EXPECT_EQ(is_strongly_connected_without(g, a), is_strongly_connected(g.remove_arc(a)));
    }
}

TEST(Blocks, Triangle) {
    const auto dec = blocks(make_view(3, {{0, 1}, {1, 2}, {0, 2}}));
    EXPECT_EQ(dec.blocks, (std::vector<VertexSet>{{0, 1, 2}}));
    EXPECT_TRUE(dec.cut_vertices.empty());
}

TEST(Blocks, Path) {
    const auto dec = blocks(make_view(3, {{0, 1}, {1, 2}}));
    EXPECT_EQ(dec.blocks, (std::vector<VertexSet>{{0, 1}, {1, 2}}));
    EXPECT_EQ(dec.cut_vertices, (VertexSet{1}));
}

TEST(Blocks, IsolatedVerticesAreSingletons) {
    const auto dec = blocks(make_view(4, {{1, 2}}));
    EXPECT_EQ(dec.blocks, (std::vector<VertexSet>{{0}, {1, 2}, {3}}));
    EXPECT_TRUE(dec.cut_vertices.empty());
}

TEST(Blocks, FigureBSplitsAtVertexFive) {
    const auto view = underlying(fig1(Fig1Variant::B).graph);
    const VertexSet brute = brute_cut_vertices(view);
    ASSERT_EQ(brute, (VertexSet{4}));  // figure label 5

    const auto dec = blocks(view);
    EXPECT_EQ(dec.cut_vertices, brute);
    // Figure labels {1,2,3,5,9,10} and {4,5,6,7,8,11,12}.
    EXPECT_EQ(dec.blocks, (std::vector<VertexSet>{{0, 1, 2, 4, 8, 9}, {3, 4, 5, 6, 7, 10, 11}}));
}

TEST(Biconnected, Basics) {
    EXPECT_TRUE(is_biconnected(make_view(3, {{0, 1}, {1, 2}, {0, 2}})));
    EXPECT_FALSE(is_biconnected(make_view(3, {{0, 1}, {1, 2}})));
    EXPECT_FALSE(is_biconnected(make_view(2, {{0, 1}})));
    EXPECT_FALSE(is_biconnected(make_view(4, {{0, 1}, {1, 2}, {0, 2}})));
    EXPECT_TRUE(is_biconnected(underlying(fig1(Fig1Variant::A).graph)));
    EXPECT_FALSE(is_biconnected(underlying(fig1(Fig1Variant::B).graph)));
}

TEST(StrongBridges, Examples) {
    EXPECT_EQ(strong_bridges(test::directed_cycle(3)), (ArcSet{ArcId{0}, ArcId{1}, ArcId{2}}));
    EXPECT_TRUE(strong_bridges(test::bidirected_complete(3)).empty());
    EXPECT_TRUE(strong_bridges(fig1(Fig1Variant::A).graph).empty());
    EXPECT_THROW((void)strong_bridges(Digraph(2, {{0, 1}})), PreconditionError);
}

TEST(TwoEdgeConnected, Examples) {
    EXPECT_TRUE(is_two_edge_connected(test::bidirected_complete(3)));
    EXPECT_FALSE(is_two_edge_connected(test::directed_cycle(3)));
    EXPECT_TRUE(is_two_edge_connected(fig1(Fig1Variant::B).graph));
    EXPECT_FALSE(is_two_edge_connected(Digraph(1, {})));
    EXPECT_FALSE(is_two_edge_connected(Digraph(2, {{0, 1}, {1, 0}})));
    EXPECT_FALSE(is_two_edge_connected(Digraph(3, {{0, 1}})));
}

Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u != v && coin(rng)) arcs.push_back({u, v});
        }
    }
    return Digraph(n, arcs);
}

// Mutual reachability by BFS from every vertex.
std::vector<std::vector<bool>> reachability(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> todo{s};
        reach[s][s] = true;
        while (!todo.empty()) {
            const Vertex v = todo.back();
            todo.pop_back();
            for (ArcId a : g.out_arcs(v)) {
                const Vertex w = g.arc(a).head;
                if (!reach[s][w]) {
                    reach[s][w] = true;
                    todo.push_back(w);
                }
            }
        }
    }
    return reach;
}

TEST(ConnectivityProperty, SccsMatchMutualReachability) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const Digraph g = random_digraph(rng, n, 0.05 + 0.3 * (trial % 5) / 4.0);
        const auto part = sccs(g);
        const auto reach = reachability(g);
        ASSERT_GE(part.count(), 1u);
        ASSERT_LE(part.count(), n);
        for (Vertex v = 0; v < n; ++v) {
            for (Vertex w = 0; w < n; ++w) {
                ASSERT_EQ(part.comp_of[v] == part.comp_of[w], reach[v][w] && reach[w][v]);
            }
        }
        // Adding an arc inside one component leaves the partition unchanged.
        for (const auto& comp : part.components) {
            if (comp.size() >= 2 && !g.find_arc(comp[1], comp[0])) {
                ASSERT_EQ(sccs(g.with_arc({comp[1], comp[0]})).components, part.components);
            }
        }
    }
}

TEST(ConnectivityProperty, RandomTreesHaveOneBlockPerEdge) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 20;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex v = 1; v < n; ++v) {
            edges.emplace_back(static_cast<Vertex>(rng() % v), v);
        }
        const auto view = make_view(n, edges);
        const auto dec = blocks(view);
        ASSERT_EQ(dec.blocks.size(), n - 1);
        std::size_t sum = 0;
        for (const auto& b : dec.blocks) sum += b.size() - 1;
        ASSERT_EQ(sum, n - 1);
        ASSERT_EQ(dec.cut_vertices, brute_cut_vertices(view));
    }
}

TEST(ConnectivityProperty, BlocksAgreeWithBruteCutVertices) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const auto view = underlying(random_digraph(rng, n, 0.15));
        const auto dec = blocks(view);
        ASSERT_EQ(dec.cut_vertices, brute_cut_vertices(view));
        // Every edge sits inside exactly one block.
        for (auto [u, v] : view.edges) {
            int holders = 0;
            for (const auto& b : dec.blocks) {
                holders += std::ranges::binary_search(b, u) && std::ranges::binary_search(b, v);
            }
            ASSERT_EQ(holders, 1);
        }
        // Blocks meet in at most one vertex, which is a cut vertex.
        for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
            for (std::size_t j = i + 1; j < dec.blocks.size(); ++j) {
                VertexSet common;
                std::ranges::set_intersection(dec.blocks[i], dec.blocks[j], std::back_inserter(common));
                ASSERT_LE(common.size(), 1u);
                if (!common.empty()) {
                    ASSERT_TRUE(std::ranges::binary_search(dec.cut_vertices, common[0]));
                }
            }
        }
    }
}

TEST(ConnectivityProperty, StrongBridgesAreExactlyTheCriticalArcs) {
    std::mt19937_64 rng(13);
    int checked = 0;
    while (checked < 150) {
        const Digraph g = random_digraph(rng, 2 + rng() % 9, 0.35);
        if (!is_strongly_connected(g)) continue;
        ++checked;
        const auto bridges = strong_bridges(g);
        for (ArcId a : g.all_arcs()) {
            const bool critical = !is_strongly_connected(g.remove_arc(a));
            ASSERT_EQ(std::ranges::binary_search(bridges, a), critical);
        }
        if (is_two_edge_connected(g)) {
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                ASSERT_GE(g.in_degree(v), 2u);
                ASSERT_GE(g.out_degree(v), 2u);
            }
            ASSERT_GE(g.arc_count(), 2 * g.vertex_count());
        }
    }
}

}  // namespace
}  // namespace esbss
