#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "lvrank/matrix.hpp"

namespace lvrank {

/// Rank over the rationals. Rows are cleared to integers and reduced with
/// Bareiss fraction-free elimination, so every intermediate is an exact
/// integer minor.
std::size_t exact_rank(const RatMatrix& m);

struct Echelon {
  RatMatrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // one per nonzero row
};

/// Gauss-Jordan elimination over the rationals.
Echelon reduced_row_echelon(const RatMatrix& m);

/// Basis of {x : m x = 0}. The basis vectors, stacked as rows, are in
/// reduced echelon form and each is then scaled to a primitive integer
/// vector with positive leading entry.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Nonzero rows of the reduced echelon form of m: a basis of the row space.
std::vector<RatVector> row_space_basis(const RatMatrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve_particular(const RatMatrix& m,
                                          const RatVector& b);

/// Result of symmetric elimination with full diagonal pivoting.
///
/// Pivots are taken at the largest remaining diagonal entry while it is
/// strictly positive. Elimination stops at the first remainder whose
/// diagonal is everywhere <= 0; a positive semidefinite matrix leaves a
/// remainder that is identically zero.
template <class T>
struct SymmetricPivoting {
  std::vector<T> pivots;
  std::vector<std::size_t> order;
  // Positive: smallest pivot, matrix is positive definite.
  // Zero: positive semidefinite and singular.
  // Negative: indefinite (or negative definite); magnitude is the largest
  // violation left in the remainder.
  T margin = T(0);
};

template <class T>
SymmetricPivoting<T> pivoted_ldlt(DenseMatrix<T> m) {
  const std::size_t n = m.rows();
  SymmetricPivoting<T> out;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (best == n || m(i, i) > m(best, best)) best = i;
    }
    if (!(m(best, best) > T(0))) break;
    const T pivot = m(best, best);
    done[best] = true;
    out.pivots.push_back(pivot);
    out.order.push_back(best);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m(i, best) == T(0)) continue;
      const T factor = m(i, best) / pivot;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j]) continue;
        m(i, j) -= factor * m(best, j);
      }
    }
  }
  if (out.pivots.size() == n) {
    out.margin = n == 0 ? T(1) : *std::min_element(out.pivots.begin(),
                                                   out.pivots.end());
    return out;
  }
  T violation(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    if (-m(i, i) > violation) violation = -m(i, i);
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j] || j == i) continue;
      T a = m(i, j);
      if (a < T(0)) a = -a;
      if (a > violation) violation = a;
    }
  }
  out.margin = -violation;
  return out;
}

bool is_positive_semidefinite(const RatMatrix& symmetric);
bool is_positive_definite(const RatMatrix& symmetric);

}  // namespace lvrank
