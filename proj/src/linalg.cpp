#include "lvrank/linalg.hpp"

#include <utility>

namespace lvrank {

std::size_t exact_rank(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Clear each row to integers; row scaling does not change the rank.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = m(i, j).get_num() * (den / m(i, j).get_den());
  }

  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

Echelon reduced_row_echelon(const RatMatrix& m) {
  Echelon out{m, {}};
  RatMatrix& r = out.reduced;
  const std::size_t rows = r.rows();
  const std::size_t cols = r.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t p = lead;
    while (p < rows && r(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(r(p, j), r(lead, j));
    const Rational inv = 1 / r(lead, col);
    for (std::size_t j = col; j < cols; ++j) r(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || r(i, col) == 0) continue;
      const Rational f = r(i, col);
      for (std::size_t j = col; j < cols; ++j) r(i, j) -= f * r(lead, j);
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  return out;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  const Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RatVector> raw;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      v[e.pivot_cols[r]] = -e.reduced(r, f);
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return raw;

  const Echelon canon = reduced_row_echelon(rows_to_matrix(raw, cols));
  std::vector<RatVector> basis;
  for (std::size_t r = 0; r < canon.pivot_cols.size(); ++r)
    basis.push_back(primitive_integer_vector(canon.reduced.row(r)));
  return basis;
}

std::vector<RatVector> row_space_basis(const RatMatrix& m) {
  const Echelon e = reduced_row_echelon(m);
  std::vector<RatVector> basis;
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
    basis.push_back(e.reduced.row(r));
  return basis;
}

std::optional<RatVector> solve_particular(const RatMatrix& m,
                                          const RatVector& b) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RatMatrix aug(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
  }
  const Echelon e = reduced_row_echelon(aug);
  RatVector x(cols, Rational(0));
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] == cols) return std::nullopt;
    x[e.pivot_cols[r]] = e.reduced(r, cols);
  }
  return x;
}

bool is_positive_semidefinite(const RatMatrix& symmetric) {
  return pivoted_ldlt(symmetric).margin >= 0;
}

bool is_positive_definite(const RatMatrix& symmetric) {
  return pivoted_ldlt(symmetric).margin > 0;
}

}  // namespace lvrank
