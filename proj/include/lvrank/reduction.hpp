#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lvrank/graph.hpp"

namespace lvrank {

/// Reduction marks, ordered by strength: Circ < Cross < Bullet.
///   Bullet: the attractor (or, for the simplified rule, the equilibria set)
///           lies in {x_i = q_i}.
///   Cross:  the attractor lies in {x_i = const}.
enum class Mark { kCirc = 0, kCross = 1, kBullet = 2 };

const char* to_string(Mark m);

class MarkedGraph {
 public:
  MarkedGraph(ColoredGraph base, std::vector<Mark> marks);

  const ColoredGraph& base() const { return base_; }
  Mark mark(std::size_t v) const { return marks_[v]; }
  const std::vector<Mark>& marks() const { return marks_; }
  std::size_t size() const { return marks_.size(); }

  std::vector<std::size_t> with_mark(Mark m) const;
  bool all(Mark m) const;

  friend bool operator==(const MarkedGraph&, const MarkedGraph&) = default;

 private:
  ColoredGraph base_;
  std::vector<Mark> marks_;
};

enum class ReductionRule {
  kA,  // j Bullet/Cross, all neighbours Bullet but l: l -> Bullet
  kB,  // j Bullet/Cross, all neighbours Bullet/Cross but l: l -> Cross
  kC,  // j Circ, all neighbours Bullet/Cross: j -> Cross
  kR,  // any j, all neighbours Bullet but k: k -> Bullet
};

const char* to_string(ReductionRule r);

struct RuleApplication {
  ReductionRule rule;
  std::size_t pivot;   // the vertex j whose neighbourhood triggers the rule
  std::size_t target;  // the vertex whose mark is upgraded
  Mark to;

  friend bool operator==(const RuleApplication&,
                         const RuleApplication&) = default;
};

/// Every rule application that would upgrade a mark, ordered by pivot
/// vertex and then by rule (a), (b), (c). Applications with the same
/// target and resulting mark are reported once, at their first position.
std::vector<RuleApplication> applicable_full_rules(
    const ColoredGraph& g, const std::vector<Mark>& marks);

/// Same for the simplified rule (R) alone.
std::vector<RuleApplication> applicable_simplified_rules(
    const ColoredGraph& g, const std::vector<Mark>& marks);

/// Picks which of `count` applicable moves fires next; must return a value
/// below `count`. An empty chooser always picks the first one.
using RuleChooser = std::function<std::size_t(std::size_t count)>;

struct Reduction {
  MarkedGraph fixpoint;
  std::vector<RuleApplication> trace;
};

/// Initial marks: Bullet on Black vertices, Circ on White ones.
std::vector<Mark> initial_marks(const ColoredGraph& g);

Reduction run_full_reduction(const ColoredGraph& g,
                             const RuleChooser& choose = {});
Reduction run_simplified_reduction(const ColoredGraph& g,
                                   const RuleChooser& choose = {});

/// Fixpoint of rules (a), (b), (c): the reduced graph R(A).
MarkedGraph reduce_full(const ColoredGraph& g);
/// Fixpoint of rule (R) alone: R_*(G). Never produces Cross marks.
MarkedGraph reduce_simplified(const ColoredGraph& g);

enum class AttractorClass {
  kGlobalPointAttractor,
  kFoliatedPointAttractors,
  kPossiblyPeriodic,
};

const char* to_string(AttractorClass c);

/// Classification of a reduce_full fixpoint.
AttractorClass classify(const MarkedGraph& reduced);

/// Bullet vertices of reduce_simplified(g): coordinates pinned to q_i on
/// the whole equilibria set of every dissipative A with graph g.
std::vector<std::size_t> equilibria_restrictions(const ColoredGraph& g);

}  // namespace lvrank
