#include "lvrank/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "lvrank/dot.hpp"
#include "lvrank/error.hpp"
#include "oracles.hpp"

namespace lvrank {
namespace {

using oracle::zero_based;

ColoredGraph seven_graph() { return build_graph(oracle::seven_species()); }

TEST(BuildGraph, SevenSpecies) {
  const ColoredGraph g = seven_graph();
  EXPECT_EQ(g.black_vertices(), zero_based({7}));
  const std::vector<Edge> expected{{0, 1}, {0, 6}, {1, 2},
                                   {3, 4}, {3, 6}, {4, 5}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_EQ(graph_to_json(g),
            R"({"n":7,"black":[7],"edges":[[1,2],[1,7],[2,3],[4,5],[4,7],[5,6]]})");
}

TEST(BuildGraph, SmallCases) {
  const ColoredGraph z = build_graph(InteractionMatrix(RatMatrix(3, 3)));
  EXPECT_EQ(z.edge_count(), 0u);
  EXPECT_TRUE(z.black_vertices().empty());
  const ColoredGraph pp = build_graph(oracle::from_ints({{0, 1}, {-1, 0}}));
  EXPECT_EQ(pp.edge_count(), 1u);
  EXPECT_FALSE(pp.is_black(0) || pp.is_black(1));
  // A one-sided entry still makes an edge.
  EXPECT_TRUE(build_graph(oracle::from_ints({{0, 0}, {5, 0}})).has_edge(0, 1));
}

TEST(BuildGraph, PositiveDiagonal) {
  try {
    build_graph(oracle::from_ints({{-1, 0}, {0, 2}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPositiveDiagonal);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(BuildGraph, TransposeInvariant) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GenConfig cfg = oracle::config(seed, 1 + seed % 9);
    const InteractionMatrix a = sample_matrix(random_sd_graph(cfg), cfg);
    EXPECT_EQ(build_graph(a), build_graph(a.transpose()));
  }
}

TEST(StablyDissipativeGraph, Examples) {
  EXPECT_TRUE(is_stably_dissipative_graph(seven_graph()));
  const ColoredGraph white_triangle(
      std::vector<Color>(3, Color::kWhite), {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_FALSE(is_stably_dissipative_graph(white_triangle));
  const ColoredGraph strong_triangle(
      {Color::kBlack, Color::kBlack, Color::kWhite}, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(is_stably_dissipative_graph(strong_triangle));
}

// Property: the union-find test agrees with brute-force cycle enumeration.
TEST(StablyDissipativeGraph, AgreesWithCycleEnumeration) {
  std::mt19937_64 rng(21);
  int positives = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const ColoredGraph g = oracle::random_graph(rng, n, 0.35, 0.5);
    const bool expected = oracle::every_cycle_has_strong_link(g);
    positives += expected;
    ASSERT_EQ(is_stably_dissipative_graph(g), expected) << graph_to_json(g);
  }
  EXPECT_GT(positives, 300);
  EXPECT_LT(positives, 1400);
}

// Property: deleting edges never creates a cycle without a strong link.
TEST(StablyDissipativeGraph, MonotoneUnderEdgeRemoval) {
  std::mt19937_64 rng(22);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ColoredGraph g = random_sd_graph(oracle::config(seed, 2 + seed % 9));
    for (const Edge& e : g.edges())
      EXPECT_TRUE(is_stably_dissipative_graph(g.without_edges({e})));
  }
}

TEST(CircEndpoints, Examples) {
  EXPECT_EQ(circ_endpoints(seven_graph()), zero_based({3, 6}));
  EXPECT_TRUE(circ_endpoints(ColoredGraph(std::vector<Color>(2, Color::kWhite),
                                          {}))
                  .empty());
  EXPECT_EQ(circ_endpoints(ColoredGraph({Color::kBlack, Color::kWhite},
                                        {{0, 1}})),
            std::vector<std::size_t>{1});
}

TEST(Components, Examples) {
  EXPECT_EQ(components(seven_graph()).size(), 1u);
  const ColoredGraph empty(std::vector<Color>(2, Color::kWhite), {});
  const std::vector<std::vector<std::size_t>> expected{{0}, {1}};
  EXPECT_EQ(components(empty), expected);
}

TEST(ColoredGraph, RejectsBadEdges) {
  EXPECT_THROW(ColoredGraph(std::vector<Color>(2, Color::kWhite), {{1, 1}}),
               Error);
  EXPECT_THROW(ColoredGraph(std::vector<Color>(2, Color::kWhite), {{0, 2}}),
               Error);
  // Duplicates merge.
  EXPECT_EQ(ColoredGraph(std::vector<Color>(2, Color::kWhite),
                         {{0, 1}, {1, 0}})
                .edge_count(),
            1u);
}

TEST(GraphJson, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ColoredGraph g = random_sd_graph(oracle::config(seed, 1 + seed % 10));
    EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
  }
  EXPECT_THROW(graph_from_json(R"({"n":2,"black":[3],"edges":[]})"), Error);
}

TEST(Dot, Rendering) {
  const std::string one =
      to_dot(ColoredGraph(std::vector<Color>{Color::kBlack}, {}));
  EXPECT_NE(one.find("1 [style=filled"), std::string::npos);
  const std::string seven = to_dot(seven_graph());
  EXPECT_EQ(std::count(seven.begin(), seven.end(), '\n'), 2 + 7 + 6 + 1);
  EXPECT_EQ(std::count(seven.begin(), seven.end(), '-') / 2, 6);
  const ColoredGraph path(std::vector<Color>(3, Color::kWhite),
                          {{0, 1}, {1, 2}});
  const MarkedGraph marked(path, {Mark::kCirc, Mark::kCross, Mark::kCirc});
  const std::string dot = to_dot(marked);
  EXPECT_NE(dot.find("2 [label=\"2\xE2\x8A\x95\", shape=doublecircle]"),
            std::string::npos);
  EXPECT_EQ(to_dot(marked), dot);
}

}  // namespace
}  // namespace lvrank
