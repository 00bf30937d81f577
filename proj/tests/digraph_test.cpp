#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <tuple>
#include <random>
#include <set>

#include "esbss/digraph.hpp"
#include "esbss/error.hpp"
#include "esbss/graph_io.hpp"
#include "esbss/testkit.hpp"
#include "test_graphs.hpp"

namespace esbss {
namespace {

using testkit::Fig1Variant;
using testkit::fig1;

TEST(Digraph, RejectsSelfLoopDuplicateAndRange) {
    EXPECT_THROW(Digraph(2, {{0, 0}}), RangeError);
    EXPECT_THROW(Digraph(2, {{0, 1}, {0, 1}}), RangeError);
    EXPECT_THROW(Digraph(2, {{0, 2}}), RangeError);
    EXPECT_NO_THROW(Digraph(2, {{0, 1}, {1, 0}}));
}

TEST(Digraph, AdjacencyMatchesArcList) {
    const Digraph g = fig1(Fig1Variant::A).graph;
    std::size_t out_total = 0;
    std::size_t in_total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (ArcId a : g.out_arcs(v)) {
            EXPECT_EQ(g.arc(a).tail, v);
        }
        for (ArcId a : g.in_arcs(v)) {
            EXPECT_EQ(g.arc(a).head, v);
        }
        out_total += g.out_degree(v);
        in_total += g.in_degree(v);
    }
    EXPECT_EQ(out_total, g.arc_count());
    EXPECT_EQ(in_total, g.arc_count());
}

TEST(ParseEdgeList, SimpleCycle) {
    const Digraph g = parse_edge_list("0 1\n1 2\n2 0");
    EXPECT_EQ(g, Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
}

TEST(ParseEdgeList, HeaderCommentsAndBlankLines) {
    const Digraph g = parse_edge_list("# leading comment\n\nn 5\n0 1   # trailing\n\t1 0\r\n");
    EXPECT_EQ(g.vertex_count(), 5u);
    EXPECT_EQ(g.arc_count(), 2u);
    EXPECT_EQ(parse_edge_list("").vertex_count(), 0u);
}

TEST(ParseEdgeList, ErrorsNameTheLine) {
    auto line_of = [](std::string_view text) {
        try {
            (void)parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    EXPECT_EQ(line_of("0 0"), 1u);
    EXPECT_EQ(line_of("0 1\n1 2\n0 1\n"), 3u);
    EXPECT_EQ(line_of("0 1\nx 2\n"), 2u);
    EXPECT_EQ(line_of("0 1 2\n"), 1u);
    EXPECT_EQ(line_of("n 3\n0 1\n1 3\n"), 3u);
    EXPECT_EQ(line_of("0 1\n-1 2\n"), 2u);
    EXPECT_EQ(line_of("n abc\n"), 1u);

    try {
        (void)parse_edge_list("0 0");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
    }
}

TEST(ParseEdgeList, FigureFilesMatchFixtures) {
    for (auto [file, variant, m] : {std::tuple{"fig1a.edges", Fig1Variant::A, 29u},
                                    std::tuple{"fig1b.edges", Fig1Variant::B, 26u},
                                    std::tuple{"fig1c.edges", Fig1Variant::C, 28u}}) {
        const Digraph g = read_edge_list_file(test::data_file(file));
        EXPECT_EQ(g.vertex_count(), 12u) << file;
        EXPECT_EQ(g.arc_count(), m) << file;
        EXPECT_EQ(g, fig1(variant).graph) << file;
    }
    EXPECT_THROW((void)read_edge_list_file(test::data_file("missing.edges")), ParseError);
}

TEST(Underlying, CollapsesAntiparallelArcs) {
    const auto u = underlying(Digraph(3, {{0, 1}, {1, 0}, {1, 2}}));
    EXPECT_EQ(u.edges, (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}}));

    const auto tri = underlying(test::directed_cycle(3));
    EXPECT_EQ(tri.edges, (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Underlying, FigureAHasSixteenEdges) {
    const Digraph g = fig1(Fig1Variant::A).graph;
    std::set<std::set<Vertex>> pairs;
    for (const Arc& a : g.arcs()) {
        pairs.insert({a.tail, a.head});
    }
    ASSERT_EQ(pairs.size(), 16u);
    EXPECT_EQ(underlying(g).edges.size(), pairs.size());
}

TEST(RemoveArc, KeepsOrderAndVertexCount) {
    const Digraph cycle = test::directed_cycle(3);
    const Digraph g = cycle.remove_arc(*cycle.find_arc(1, 2));
    EXPECT_EQ(g, Digraph(3, {{0, 1}, {2, 0}}));

    EXPECT_THROW((void)g.remove_arc(ArcId{2}), RangeError);
    EXPECT_NO_THROW((void)cycle.remove_arc(ArcId{2}));
}

TEST(RemoveArc, FigureAMinusTwoToTenIsFigureC) {
    const Digraph a = fig1(Fig1Variant::A).graph;
    const Digraph c = fig1(Fig1Variant::C).graph;
    const Digraph g = a.remove_arc(*a.find_arc(1, 9));
    EXPECT_EQ(g.vertex_count(), 12u);
    EXPECT_EQ(g.arc_count(), 28u);
    EXPECT_TRUE(same_arc_set(g, c));
}

TEST(Induced, RelabelsDensely) {
    const auto sub = induced(test::directed_cycle(3), std::vector<Vertex>{0, 1});
    EXPECT_EQ(sub.graph, Digraph(2, {{0, 1}}));
    EXPECT_EQ(sub.original, (std::vector<Vertex>{0, 1}));

    const auto gapped = induced(Digraph(4, {{3, 1}, {1, 3}, {0, 2}}), std::vector<Vertex>{3, 1});
    EXPECT_EQ(gapped.graph, Digraph(2, {{1, 0}, {0, 1}}));
    EXPECT_EQ(gapped.original, (std::vector<Vertex>{1, 3}));

    EXPECT_THROW((void)induced(test::directed_cycle(3), std::vector<Vertex>{5}), RangeError);
}

TEST(Induced, WholeVertexSetIsIdentity) {
    const Digraph g = fig1(Fig1Variant::A).graph;
    std::vector<Vertex> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    const auto sub = induced(g, all);
    EXPECT_EQ(sub.graph, g);
    EXPECT_EQ(sub.original, all);
}

TEST(Induced, FigureBLeftCycle) {
    const Digraph g = fig1(Fig1Variant::B).graph;
    // Figure labels {1,2,3,5,9,10}.
    const std::vector<Vertex> keep{0, 1, 2, 4, 8, 9};
    const auto expected = std::ranges::count_if(g.arcs(), [&](const Arc& a) {
        return std::ranges::find(keep, a.tail) != keep.end() &&
               std::ranges::find(keep, a.head) != keep.end();
    });
    ASSERT_EQ(expected, 12);
    EXPECT_EQ(induced(g, keep).graph.arc_count(), 12u);
}

TEST(ToDot, RendersEveryArcOnce) {
    const Digraph g = fig1(Fig1Variant::A).graph;
    const std::string dot = to_dot(g);
    EXPECT_EQ(dot.rfind("digraph G {", 0), 0u);
    std::size_t arrows = 0;
    for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; pos += 2) {
        ++arrows;
    }
    EXPECT_EQ(arrows, 29u);
    std::size_t node_lines = 0;
    for (Vertex v = 0; v < 12; ++v) {
        if (dot.find("  " + std::to_string(v) + ";\n") != std::string::npos) {
            ++node_lines;
        }
    }
    EXPECT_EQ(node_lines, 12u);
    EXPECT_EQ(dot.find("color=red"), std::string::npos);
    EXPECT_EQ(dot, to_dot(g));
}

TEST(ToDot, HighlightsSelectedArcs) {
    const Digraph g = test::directed_cycle(3);
    const std::string dot = to_dot(g, ArcSet{ArcId{1}});
    EXPECT_NE(dot.find("1 -> 2 [color=red"), std::string::npos);
    EXPECT_EQ(dot.find("0 -> 1 [color"), std::string::npos);
    EXPECT_NE(to_dot(g, {}, 1).find("3 -> 1;"), std::string::npos);
}

TEST(DigraphProperty, SerializeParseRoundTrip) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + rng() % 20;
        const std::size_t extra = rng() % (n * (n - 1) - 2 * n + 1);
        const Digraph g = testkit::generate({n, extra, rng()});
        EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
    }
    const Digraph isolated(5, {{0, 1}});
    EXPECT_EQ(parse_edge_list(write_edge_list(isolated)), isolated);
}

TEST(DigraphProperty, RemoveArcShrinksUnderlyingOnlyWithoutPartner) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 4 + rng() % 8;
        const Digraph g = testkit::generate({n, test::capped_extra(n, rng() % 10), rng()});
        const auto full = underlying(g);
        for (ArcId a : g.all_arcs()) {
            const Digraph h = g.remove_arc(a);
            ASSERT_EQ(h.vertex_count(), g.vertex_count());
            ASSERT_EQ(h.arc_count() + 1, g.arc_count());
            const auto part = underlying(h);
            ASSERT_TRUE(std::ranges::includes(full.edges, part.edges));
            const bool partner = g.find_arc(g.arc(a).head, g.arc(a).tail).has_value();
            ASSERT_EQ(part == full, partner);
        }
    }
}

}  // namespace
}  // namespace esbss
