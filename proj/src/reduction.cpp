#include "lvrank/reduction.hpp"

#include <algorithm>
#include <cassert>

#include "lvrank/error.hpp"

namespace lvrank {

const char* to_string(Mark m) {
  switch (m) {
    case Mark::kCirc: return "circ";
    case Mark::kCross: return "cross";
    case Mark::kBullet: return "bullet";
  }
  return "?";
}

const char* to_string(ReductionRule r) {
  switch (r) {
    case ReductionRule::kA: return "a";
    case ReductionRule::kB: return "b";
    case ReductionRule::kC: return "c";
    case ReductionRule::kR: return "R";
  }
  return "?";
}

const char* to_string(AttractorClass c) {
  switch (c) {
    case AttractorClass::kGlobalPointAttractor: return "GlobalPointAttractor";
    case AttractorClass::kFoliatedPointAttractors:
      return "FoliatedPointAttractors";
    case AttractorClass::kPossiblyPeriodic: return "PossiblyPeriodic";
  }
  return "?";
}

MarkedGraph::MarkedGraph(ColoredGraph base, std::vector<Mark> marks)
    : base_(std::move(base)), marks_(std::move(marks)) {
  if (marks_.size() != base_.size())
    throw Error(ErrorCode::kInvalidArgument, "one mark per vertex required");
  for (std::size_t v = 0; v < marks_.size(); ++v)
    if (base_.is_black(v) && marks_[v] == Mark::kCirc)
      throw Error(ErrorCode::kInvalidArgument,
                  "black vertex " + std::to_string(v + 1) + " marked circ");
}

std::vector<std::size_t> MarkedGraph::with_mark(Mark m) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < marks_.size(); ++v)
    if (marks_[v] == m) out.push_back(v);
  return out;
}

bool MarkedGraph::all(Mark m) const {
  return std::all_of(marks_.begin(), marks_.end(),
                     [m](Mark x) { return x == m; });
}

std::vector<Mark> initial_marks(const ColoredGraph& g) {
  std::vector<Mark> marks(g.size(), Mark::kCirc);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.is_black(v)) marks[v] = Mark::kBullet;
  return marks;
}

namespace {

// If every neighbour of j except exactly one has a mark >= `floor`, returns
// that one; otherwise returns g.size().
std::size_t sole_exception(const ColoredGraph& g,
                           const std::vector<Mark>& marks, std::size_t j,
                           Mark floor) {
  std::size_t exception = g.size();
  for (std::size_t k : g.neighbours(j)) {
    if (marks[k] >= floor) continue;
    if (exception != g.size()) return g.size();
    exception = k;
  }
  return exception;
}

void push_unique(std::vector<RuleApplication>& out, RuleApplication app) {
  for (const auto& existing : out)
    if (existing.target == app.target && existing.to == app.to) return;
  out.push_back(app);
}

Reduction run(const ColoredGraph& g, const RuleChooser& choose,
              std::vector<RuleApplication> (*applicable)(
                  const ColoredGraph&, const std::vector<Mark>&)) {
  std::vector<Mark> marks = initial_marks(g);
  std::vector<RuleApplication> trace;
  for (;;) {
    const auto moves = applicable(g, marks);
    if (moves.empty()) break;
    const std::size_t pick = choose ? choose(moves.size()) : 0;
    assert(pick < moves.size());
    const RuleApplication& move = moves[pick];
    assert(move.to > marks[move.target]);
    marks[move.target] = move.to;
    trace.push_back(move);
  }
  return Reduction{MarkedGraph(g, std::move(marks)), std::move(trace)};
}

}  // namespace

std::vector<RuleApplication> applicable_full_rules(
    const ColoredGraph& g, const std::vector<Mark>& marks) {
  std::vector<RuleApplication> out;
  const std::size_t none = g.size();
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (marks[j] != Mark::kCirc) {
      const std::size_t l = sole_exception(g, marks, j, Mark::kBullet);
      if (l != none)
        push_unique(out, {ReductionRule::kA, j, l, Mark::kBullet});
      const std::size_t l2 = sole_exception(g, marks, j, Mark::kCross);
      if (l2 != none)  // the exception is necessarily Circ here
        push_unique(out, {ReductionRule::kB, j, l2, Mark::kCross});
    } else {
      const auto& nb = g.neighbours(j);
      if (std::all_of(nb.begin(), nb.end(),
                      [&](std::size_t k) { return marks[k] >= Mark::kCross; }))
        push_unique(out, {ReductionRule::kC, j, j, Mark::kCross});
    }
  }
  return out;
}

std::vector<RuleApplication> applicable_simplified_rules(
    const ColoredGraph& g, const std::vector<Mark>& marks) {
  std::vector<RuleApplication> out;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const std::size_t k = sole_exception(g, marks, j, Mark::kBullet);
    if (k != g.size())
      push_unique(out, {ReductionRule::kR, j, k, Mark::kBullet});
  }
  return out;
}

Reduction run_full_reduction(const ColoredGraph& g,
                             const RuleChooser& choose) {
  return run(g, choose, &applicable_full_rules);
}

Reduction run_simplified_reduction(const ColoredGraph& g,
                                   const RuleChooser& choose) {
  return run(g, choose, &applicable_simplified_rules);
}

MarkedGraph reduce_full(const ColoredGraph& g) {
  return run_full_reduction(g).fixpoint;
}

MarkedGraph reduce_simplified(const ColoredGraph& g) {
  return run_simplified_reduction(g).fixpoint;
}

AttractorClass classify(const MarkedGraph& reduced) {
  if (reduced.all(Mark::kBullet)) return AttractorClass::kGlobalPointAttractor;
  if (reduced.with_mark(Mark::kCirc).empty())
    return AttractorClass::kFoliatedPointAttractors;
  return AttractorClass::kPossiblyPeriodic;
}

std::vector<std::size_t> equilibria_restrictions(const ColoredGraph& g) {
  return reduce_simplified(g).with_mark(Mark::kBullet);
}

}  // namespace lvrank
