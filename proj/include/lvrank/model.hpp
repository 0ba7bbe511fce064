#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "lvrank/matrix.hpp"
#include "lvrank/rational.hpp"

namespace lvrank {

/// Square matrix of exact rationals a_ij: the effect of species j on
/// species i. Immutable once constructed.
class InteractionMatrix {
 public:
  /// Throws Error(kInvalidArgument) unless `entries` is square with n >= 1.
  explicit InteractionMatrix(RatMatrix entries);

  std::size_t size() const { return entries_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_(i, j);
  }
  const RatMatrix& entries() const { return entries_; }
  InteractionMatrix transpose() const {
    return InteractionMatrix(entries_.transpose());
  }

  friend bool operator==(const InteractionMatrix&,
                         const InteractionMatrix&) = default;

 private:
  RatMatrix entries_;
};

struct GrowthRates {
  RatVector r;
};

/// dx/dt = x * A (x - q) with q a positive interior equilibrium.
class LVSystem {
 public:
  /// Throws Error(kInvalidArgument) on a size mismatch or non-positive q_i.
  LVSystem(InteractionMatrix a, RatVector q);

  const InteractionMatrix& matrix() const { return a_; }
  const RatVector& equilibrium() const { return q_; }
  std::size_t size() const { return q_.size(); }

  /// r = -A q, the intrinsic rates of the equivalent growth-rate form.
  GrowthRates growth_rates() const;

 private:
  InteractionMatrix a_;
  RatVector q_;
};

/// Builds the system whose equilibrium q solves A q = -r with q > 0.
/// For singular A the minimum-norm solution is used when it is positive;
/// otherwise the solution maximizing min_i q_i (capped at 1) is chosen, which
/// is positive exactly when the solution family meets the open orthant.
/// Throws Error(kNoSolution) or Error(kNoPositiveSolution).
LVSystem system_from_rates(const InteractionMatrix& a, const GrowthRates& r);

/// Matrix document: {"matrix": [[...]], "q": [...], "r": [...]}.
struct MatrixDocument {
  InteractionMatrix matrix;
  std::optional<RatVector> q;
  std::optional<RatVector> r;
};

/// Parses a JSON matrix document. Entries may be JSON numbers or strings
/// holding rational literals; number literals are read from their source
/// text so decimals stay exact. A bare array of rows is accepted as
/// shorthand for {"matrix": ...}.
MatrixDocument parse_document(std::string_view json_text);

/// parse_document(text).matrix
InteractionMatrix parse_matrix(std::string_view json_text);

/// Resolves the (A, q) pair of a document; exactly one of "q"/"r" must be
/// present.
LVSystem system_from_document(const MatrixDocument& doc);

/// Canonical JSON rendering with rational strings: {"matrix": [[...]]}.
std::string render_matrix(const InteractionMatrix& a);

}  // namespace lvrank
