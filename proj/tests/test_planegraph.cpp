#include <gtest/gtest.h>

#include <random>

#include "squareprod/generators.hpp"
#include "squareprod/plane_graph.hpp"
#include "support/oracles.hpp"

using namespace squareprod;

namespace {

const char* kCycle4 = "V 4\n1: 4 2\n2: 1 3\n3: 2 4\n4: 3 1\nOUTER 1 2\n";

std::size_t total_length(const PlaneGraph& g)
{
    std::size_t sum = 0;
    for (const auto& f : g.faces())
        sum += f.length();
    return sum;
}

}  // namespace

TEST(ParsePlaneGraph, FourCycleHasTwoFaces)
{
    const PlaneGraph g = parse_plane_graph(kCycle4);
    EXPECT_EQ(g.num_vertices(), 4u);
    EXPECT_EQ(g.num_edges(), 4u);
    ASSERT_EQ(g.faces().size(), 2u);
    for (const auto& f : g.faces())
        EXPECT_EQ(f.length(), 4u);
}

TEST(ParsePlaneGraph, SingleEdgeHasOneFace)
{
    const PlaneGraph g = parse_plane_graph("V 2\n0: 1\n1: 0\nOUTER 0 1\n");
    EXPECT_EQ(g.num_vertices(), 2u);
    EXPECT_EQ(g.num_edges(), 1u);
    EXPECT_EQ(g.faces().size(), 1u);
}

TEST(ParsePlaneGraph, CrossingK4RotationFailsEuler)
{
    // Same neighbours as a plane K4 but vertex 3 lists them in an order that
    // no drawing realises.
    const char* text = "V 4\n0: 2 3 1\n1: 0 3 2\n2: 1 3 0\n3: 2 0 1\nOUTER 0 1\n";
    try {
        parse_plane_graph(text);
        FAIL() << "expected NotPlanar";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPlanar);
    }
    // Count the faces of that rotation directly.
    const std::map<VertexId, std::vector<VertexId>> rot{{0, {2, 3, 1}}, {1, {0, 3, 2}}, {2, {1, 3, 0}}, {3, {2, 0, 1}}};
    EXPECT_NE(oracle::faces(rot).size(), 4u);
}

TEST(ParsePlaneGraph, ReportsLineAndColumn)
{
    try {
        parse_plane_graph(oracle::read_fixture("malformed.spg"));
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Parse);
        EXPECT_EQ(e.line(), 5);
        EXPECT_GE(e.column(), 1);
    }
}

TEST(ParsePlaneGraph, RejectsAsymmetricAdjacency)
{
    try {
        parse_plane_graph(oracle::read_fixture("asymmetric.spg"));
        FAIL() << "expected AsymmetricAdjacency";
    } catch (const ParseError&) {
        FAIL() << "syntax was fine";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AsymmetricAdjacency);
    }
}

TEST(ParsePlaneGraph, RejectsDanglingOuter)
{
    try {
        parse_plane_graph("V 4\n1: 4 2\n2: 1 3\n3: 2 4\n4: 3 1\nOUTER 1 3\n");
        FAIL() << "expected DanglingOuter";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DanglingOuter);
    }
}

TEST(ParsePlaneGraph, RejectsBadHeaderAndUnknownNeighbour)
{
    EXPECT_THROW(parse_plane_graph("0: 1\n1: 0\n"), ParseError);
    EXPECT_THROW(parse_plane_graph("V 3\n0: 1\n1: 0\n"), ParseError);
    EXPECT_THROW(parse_plane_graph("V 2\n0: 5\n1:\n"), ParseError);
    EXPECT_THROW(parse_plane_graph("V 2\n0: 1\n0: 1\n"), ParseError);
}

TEST(TraceFaces, PathHasOneFaceOfLengthFour)
{
    const PlaneGraph g = parse_plane_graph("V 3\n0: 1\n1: 0 2\n2: 1\nOUTER 0 1\n");
    ASSERT_EQ(g.faces().size(), 1u);
    EXPECT_EQ(g.faces()[0].length(), 4u);
    EXPECT_TRUE(g.faces()[0].is_outer);
}

TEST(TraceFaces, GridMatchesHandTrace)
{
    const PlaneGraph g = parse_plane_graph(oracle::read_fixture("grid3x3.spg"));
    const auto expected = oracle::faces(g.rotations());
    ASSERT_EQ(g.faces().size(), 5u);
    ASSERT_EQ(expected.size(), 5u);
    std::multiset<std::size_t> lengths;
    std::size_t outer = 0;
    for (const auto& f : g.faces()) {
        lengths.insert(f.length());
        outer += f.is_outer;
        EXPECT_NE(std::find(expected.begin(), expected.end(), f.vertices()), expected.end());
    }
    EXPECT_EQ(outer, 1u);
    EXPECT_EQ(lengths, (std::multiset<std::size_t>{4, 4, 4, 4, 8}));
}

TEST(TraceFaces, WalksChainAndCoverEveryDartOnce)
{
    for (const auto& entry : squaregraph_corpus(3)) {
        const PlaneGraph& g = entry.graph;
        std::set<Dart> seen;
        for (const auto& f : g.faces())
            for (std::size_t k = 0; k < f.length(); ++k) {
                const Dart& d = f.boundary[k];
                EXPECT_EQ(d.head, f.boundary[(k + 1) % f.length()].tail) << entry.name;
                EXPECT_TRUE(seen.insert(d).second) << entry.name;
            }
        EXPECT_EQ(seen.size(), 2 * g.num_edges()) << entry.name;
        EXPECT_EQ(total_length(g), 2 * g.num_edges()) << entry.name;
        // Euler: V - E + F = 2 per component with an edge, 1 per isolated vertex.
        std::size_t expected = 0;
        for (const auto& comp : connected_components(g.graph()))
            expected += comp.size() == 1 ? 1 : 2;
        EXPECT_EQ(g.num_vertices() + g.faces().size(), g.num_edges() + expected) << entry.name;
    }
}

TEST(InnerVertices, Examples)
{
    EXPECT_EQ(inner_vertices(parse_plane_graph(oracle::read_fixture("grid3x3.spg"))), std::set<VertexId>{4});
    EXPECT_TRUE(inner_vertices(parse_plane_graph(oracle::read_fixture("tree.spg"))).empty());
    EXPECT_TRUE(inner_vertices(parse_plane_graph(kCycle4)).empty());
}

TEST(InnerVertices, PartitionWithOuterFace)
{
    for (const auto& entry : squaregraph_corpus(5)) {
        const auto inner = inner_vertices(entry.graph);
        std::set<VertexId> outer;
        for (const auto& f : entry.graph.faces())
            if (f.is_outer)
                for (VertexId v : f.vertices())
                    outer.insert(v);
        for (VertexId v : inner)
            EXPECT_FALSE(outer.contains(v)) << entry.name;
        for (VertexId v : entry.graph.vertices())
            EXPECT_TRUE(inner.contains(v) || entry.graph.outer_vertices().contains(v)) << entry.name;
    }
}

TEST(Serialize, RoundTrips)
{
    const std::vector<std::string> texts{kCycle4, oracle::read_fixture("grid3x3.spg"), "V 1\n7:\n",
                                         oracle::read_fixture("two-grids.spg")};
    for (const auto& text : texts) {
        const PlaneGraph g = parse_plane_graph(text);
        EXPECT_EQ(parse_plane_graph(serialize(g)), g);
    }
    for (const auto& entry : squaregraph_corpus(11))
        EXPECT_EQ(parse_plane_graph(serialize(entry.graph)), entry.graph) << entry.name;
}

TEST(Serialize, EqualityIgnoresRotationStartAndOuterDartChoice)
{
    const PlaneGraph a = parse_plane_graph(kCycle4);
    const PlaneGraph b = parse_plane_graph("V 4\n1: 2 4\n2: 3 1\n3: 4 2\n4: 1 3\nOUTER 3 4\n");
    EXPECT_EQ(a, b);
}

TEST(PlaneGraphFromDrawing, OuterFaceHasLargestArea)
{
    const PlaneGraph g = grid_plane_graph(4, 3);
    for (const auto& f : g.faces()) {
        if (f.is_outer)
            EXPECT_EQ(f.length(), 2u * (3 + 2));
        else
            EXPECT_EQ(f.length(), 4u);
    }
}

TEST(EdgeList, ParsesAndRejects)
{
    const Graph g = parse_edge_list(oracle::read_fixture("p5.graph"));
    EXPECT_EQ(g, path_graph(5));
    EXPECT_EQ(parse_edge_list(serialize_edge_list(complete_graph(4))), complete_graph(4));
    EXPECT_THROW(parse_edge_list("V 2\n0 2\n"), ParseError);
    EXPECT_THROW(parse_edge_list("V 2\n1 1\n"), ParseError);
    EXPECT_THROW(parse_edge_list("0 1\n"), ParseError);
}
