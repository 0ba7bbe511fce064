#include "lvrank/reduction.hpp"

#include <gtest/gtest.h>

#include <random>

#include "lvrank/genlab.hpp"
#include "oracles.hpp"

namespace lvrank {
namespace {

using oracle::zero_based;

ColoredGraph food_chain_graph() { return build_graph(oracle::food_chain()); }
ColoredGraph seven_graph() { return build_graph(oracle::seven_species()); }

RuleChooser random_chooser(std::mt19937_64& rng) {
  return [&rng](std::size_t count) { return rng() % count; };
}

TEST(ReduceFull, FoodChainAllBullet) {
  const Reduction r = run_full_reduction(food_chain_graph());
  EXPECT_TRUE(r.fixpoint.all(Mark::kBullet));
  ASSERT_EQ(r.trace.size(), 2u);
  EXPECT_EQ(r.trace[0],
            (RuleApplication{ReductionRule::kA, 0, 1, Mark::kBullet}));
  EXPECT_EQ(r.trace[1],
            (RuleApplication{ReductionRule::kA, 1, 2, Mark::kBullet}));
  EXPECT_EQ(classify(r.fixpoint), AttractorClass::kGlobalPointAttractor);
}

TEST(ReduceFull, SevenSpeciesKeepsCircs) {
  const Reduction r = run_full_reduction(seven_graph());
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(r.fixpoint.with_mark(Mark::kBullet), zero_based({7}));
  EXPECT_EQ(r.fixpoint.with_mark(Mark::kCirc).size(), 6u);
  EXPECT_EQ(classify(r.fixpoint), AttractorClass::kPossiblyPeriodic);
}

TEST(ReduceFull, AllBlackNeedsNoRules) {
  const ColoredGraph g(std::vector<Color>(4, Color::kBlack),
                       {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const Reduction r = run_full_reduction(g);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_TRUE(r.fixpoint.all(Mark::kBullet));
  EXPECT_EQ(classify(r.fixpoint), AttractorClass::kGlobalPointAttractor);
}

TEST(ReduceFull, CrossMarksGiveFoliatedClass) {
  // An isolated White vertex is a line of equilibria: rule (c) fires with a
  // vacuous neighbourhood.
  const ColoredGraph lone(std::vector<Color>{Color::kWhite}, {});
  EXPECT_EQ(reduce_full(lone).marks(), std::vector<Mark>{Mark::kCross});
  EXPECT_EQ(classify(reduce_full(lone)),
            AttractorClass::kFoliatedPointAttractors);
  // Black 0 with White leaves 1 and 2: rules (a) and (b) at 0 see two
  // candidates and stay silent, but (c) marks each leaf Cross.
  const ColoredGraph cherry({Color::kBlack, Color::kWhite, Color::kWhite},
                            {{0, 1}, {0, 2}});
  const MarkedGraph m = reduce_full(cherry);
  EXPECT_EQ(m.marks(),
            (std::vector<Mark>{Mark::kBullet, Mark::kCross, Mark::kCross}));
  EXPECT_EQ(classify(m), AttractorClass::kFoliatedPointAttractors);
}

TEST(ReduceSimplified, Examples) {
  EXPECT_EQ(reduce_simplified(seven_graph()).with_mark(Mark::kBullet),
            zero_based({2, 5, 7}));
  EXPECT_EQ(equilibria_restrictions(seven_graph()), zero_based({2, 5, 7}));
  const ColoredGraph edge(std::vector<Color>(2, Color::kWhite), {{0, 1}});
  EXPECT_TRUE(reduce_simplified(edge).all(Mark::kBullet));
  const ColoredGraph lone(std::vector<Color>{Color::kWhite}, {});
  EXPECT_EQ(reduce_simplified(lone).marks(), std::vector<Mark>{Mark::kCirc});
  EXPECT_TRUE(equilibria_restrictions(lone).empty());
  const ColoredGraph black(std::vector<Color>(3, Color::kBlack), {{0, 1}});
  EXPECT_EQ(equilibria_restrictions(black).size(), 3u);
}

TEST(ReduceSimplified, NoExceptionVertexNoFire) {
  // j = 1 has both neighbours Bullet: (R) marks nothing through j.
  const ColoredGraph g({Color::kBlack, Color::kWhite, Color::kBlack},
                       {{0, 1}, {1, 2}});
  const auto apps =
      applicable_simplified_rules(g, initial_marks(g));
  for (const auto& a : apps) EXPECT_NE(a.pivot, 1u);
}

TEST(MarkedGraph, BlackNeverCirc) {
  EXPECT_ANY_THROW(MarkedGraph(ColoredGraph({Color::kBlack}, {}),
                               {Mark::kCirc}));
}

// Property: every fixpoint reachable under any rule order is the one the
// library returns (exhaustive search), and random orders agree.
TEST(Reduction, ConfluentAgainstExhaustiveSearch) {
  std::mt19937_64 rng(31);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const ColoredGraph g = random_sd_graph(oracle::config(seed, 1 + seed % 8));
    const auto full = oracle::all_fixpoints(g, false);
    const auto simple = oracle::all_fixpoints(g, true);
    ASSERT_EQ(full.size(), 1u) << graph_to_json(g);
    ASSERT_EQ(simple.size(), 1u) << graph_to_json(g);
    EXPECT_EQ(reduce_full(g).marks(), *full.begin());
    EXPECT_EQ(reduce_simplified(g).marks(), *simple.begin());
    for (int order = 0; order < 20; ++order) {
      EXPECT_EQ(run_full_reduction(g, random_chooser(rng)).fixpoint,
                reduce_full(g));
      EXPECT_EQ(run_simplified_reduction(g, random_chooser(rng)).fixpoint,
                reduce_simplified(g));
    }
  }
}

// The rules are stated for arbitrary colored graphs; confluence holds there
// too.
TEST(Reduction, ConfluentOnArbitraryGraphs) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 150; ++trial) {
    const ColoredGraph g = oracle::random_graph(rng, 1 + rng() % 7, 0.4, 0.4);
    EXPECT_EQ(oracle::all_fixpoints(g, false).size(), 1u);
    EXPECT_EQ(oracle::all_fixpoints(g, true).size(), 1u);
  }
}

TEST(Reduction, TraceUpgradesStrictlyAndTerminates) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ColoredGraph g = random_sd_graph(oracle::config(seed, 1 + seed % 10));
    const Reduction r = run_full_reduction(g);
    EXPECT_LE(r.trace.size(), 2 * g.size());
    std::vector<Mark> marks = initial_marks(g);
    for (const auto& step : r.trace) {
      EXPECT_LT(static_cast<int>(marks[step.target]),
                static_cast<int>(step.to));
      marks[step.target] = step.to;
    }
    EXPECT_EQ(marks, r.fixpoint.marks());
    EXPECT_TRUE(applicable_full_rules(g, marks).empty());
  }
}

TEST(Reduction, SimplifiedBulletsContainFullBullets) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ColoredGraph g = random_sd_graph(oracle::config(seed, 1 + seed % 10));
    const MarkedGraph full = reduce_full(g);
    const MarkedGraph simple = reduce_simplified(g);
    EXPECT_TRUE(simple.with_mark(Mark::kCross).empty());
    for (std::size_t v : full.with_mark(Mark::kBullet))
      EXPECT_EQ(simple.mark(v), Mark::kBullet) << graph_to_json(g);
  }
}

}  // namespace
}  // namespace lvrank
