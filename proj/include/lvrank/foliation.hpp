#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lvrank/linalg.hpp"
#include "lvrank/model.hpp"

namespace lvrank {

/// Linearly independent exact vectors annihilated by some matrix.
struct KernelBasis {
  std::vector<RatVector> vectors;

  std::size_t dimension() const { return vectors.size(); }
};

std::size_t exact_rank(const InteractionMatrix& a);

/// Basis of Ker(A) in canonical form (see nullspace()).
KernelBasis kernel_basis(const InteractionMatrix& a);
/// Basis of Ker(A^T): the rows of W, whose log-combinations W log x are
/// constant along every orbit.
KernelBasis kernel_basis_T(const InteractionMatrix& a);

/// Level of the invariant foliation through x: W log x (binary64).
struct Leaf {
  std::vector<double> levels;
};

/// Throws Error(kNonPositivePoint) unless x > 0.
Leaf conserved_levels(const InteractionMatrix& a, const std::vector<double>& x);

struct NewtonOptions {
  double tolerance = 1e-12;  // max-norm of the residual
  int max_iterations = 100;
  int max_halvings = 60;
};

/// The unique x > 0 with W log x = levels and A (x - q) = 0.
///
/// Damped Newton on u = log x for { W u = c, V (e^u - q) = 0 }, with V a
/// basis of the row space of A. The default start solves W u = c in the
/// least-squares sense around log q. Throws Error(kSingularJacobian) or
/// Error(kNoConvergence).
std::vector<double> leaf_equilibrium_intersection(
    const LVSystem& system, const Leaf& leaf, const NewtonOptions& options = {},
    const std::optional<std::vector<double>>& start = std::nullopt);

/// Positive equilibria {x > 0 : A (x - q) = 0} = (q + span directions) ∩ R^n_+.
struct EquilibriaSet {
  RatVector base;
  KernelBasis directions;
  // For a one-dimensional kernel: the open interval of s with
  // base + s * direction > 0. Missing ends are infinite.
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

EquilibriaSet equilibria_set(const LVSystem& system);

}  // namespace lvrank
