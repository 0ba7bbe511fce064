#include "lvrank/certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include <Eigen/Eigenvalues>

#include "lvrank/linalg.hpp"

namespace lvrank {

namespace {

constexpr int kMinExponent = -12;
constexpr int kMaxExponent = 12;
constexpr int kMaxSweeps = 60;
constexpr int kAscentIterations = 4000;

}  // namespace

const char* outcome_name(const CertifyOutcome& outcome) {
  switch (outcome.index()) {
    case 0: return "Certified";
    case 1: return "RefutedGraph";
    case 2: return "RefutedAlgebra";
    default: return "Unknown";
  }
}

RatMatrix sym_part(const RatMatrix& a) {
  RatMatrix s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      s(i, j) = (a(i, j) + a(j, i)) / 2;
  return s;
}

RatMatrix skew_part(const RatMatrix& a) {
  RatMatrix s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      s(i, j) = (a(i, j) - a(j, i)) / 2;
  return s;
}

Rational scaled_form(const InteractionMatrix& a, const RatVector& c,
                     const RatVector& x) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < a.size(); ++j) row += a(i, j) * x[j];
    total += c[i] * x[i] * row;
  }
  return total;
}

namespace {

RatMatrix negated_sym(const InteractionMatrix& a, const RatVector& c) {
  RatMatrix s = sym_part(scale_rows(a.entries(), c));
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) = -s(i, j);
  return s;
}

template <class T>
DenseMatrix<T> principal_block(const DenseMatrix<T>& m,
                               const std::vector<std::size_t>& idx) {
  DenseMatrix<T> b(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) b(i, j) = m(idx[i], idx[j]);
  return b;
}

bool positive(const RatVector& c) {
  return std::all_of(c.begin(), c.end(),
                     [](const Rational& x) { return x > 0; });
}

}  // namespace

bool verify_certificate(const InteractionMatrix& a, const Certificate& c) {
  if (c.c.size() != a.size() || !positive(c.c)) return false;
  return is_positive_semidefinite(negated_sym(a, c.c));
}

bool is_almost_skew(const InteractionMatrix& a, const Certificate& c) {
  const std::size_t n = a.size();
  if (c.c.size() != n || !positive(c.c)) return false;
  std::vector<std::size_t> black;
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) < 0) black.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || (a(i, i) != 0 && a(j, j) != 0)) continue;
      if (c.c[i] * a(i, j) != -(c.c[j] * a(j, i))) return false;
    }
  }
  return is_positive_definite(principal_block(negated_sym(a, c.c), black));
}

std::vector<std::size_t> lemma1_seed(const InteractionMatrix& a,
                                     const Certificate& /*c*/) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a(i, i) < 0) out.push_back(i);
  return out;
}

namespace {

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector x(n, Rational(0));
  x[i] = 1;
  return x;
}

// Witness for an edge {i, j} with White i whose entries cannot be balanced:
// x supported on {i, j} with x^T C A x = 1 for the given c.
RatVector edge_witness(const InteractionMatrix& a, const RatVector& c,
                       std::size_t i, std::size_t j) {
  const Rational s = c[i] * a(i, j) + c[j] * a(j, i);
  Rational t = (abs(c[j] * a(j, j)) + 1) / abs(s);
  if (s < 0) t = -t;
  RatVector x(a.size(), Rational(0));
  x[i] = t;
  x[j] = 1;
  return x;
}

// Margin of -sym(diag(c) A) on `block`, normalized by its largest diagonal
// entry so that the overall scale of c does not matter.
double normalized_margin(const RealMatrix& a, const std::vector<double>& c,
                         const std::vector<std::size_t>& block) {
  const std::size_t k = block.size();
  RealMatrix m(k, k);
  double scale = 0.0;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) {
      const std::size_t i = block[p];
      const std::size_t j = block[q];
      m(p, q) = -0.5 * (c[i] * a(i, j) + c[j] * a(j, i));
      if (p == q) scale = std::max(scale, std::abs(m(p, q)));
    }
  const double margin = pivoted_ldlt(m).margin;
  return scale > 0.0 ? margin / scale : margin;
}

struct ScaleSearch {
  RatVector base;                     // propagated c before group scaling
  std::vector<std::size_t> group;     // group id per vertex
  std::size_t group_count = 0;
  std::vector<std::size_t> block;     // vertices entering the objective
};

RatVector apply_exponents(const ScaleSearch& s, const std::vector<int>& k) {
  RatVector c = s.base;
  for (std::size_t v = 0; v < c.size(); ++v) {
    const int e = k[s.group[v]];
    mpz_class p = 1;
    p <<= static_cast<unsigned long>(std::abs(e));
    c[v] = e >= 0 ? Rational(c[v] * p) : Rational(c[v] / p);
  }
  return c;
}

std::vector<int> coordinate_descent(const InteractionMatrix& a,
                                    const ScaleSearch& s) {
  const RealMatrix af = to_double(a.entries());
  const std::vector<double> base = to_double(s.base);
  std::vector<int> k(s.group_count, 0);
  auto score = [&](const std::vector<int>& exps) {
    std::vector<double> c(base.size());
    for (std::size_t v = 0; v < c.size(); ++v)
      c[v] = std::ldexp(base[v], exps[s.group[v]]);
    return normalized_margin(af, c, s.block);
  };
  double best = score(k);
  // Group 0 holds vertex 0 and stays fixed: only relative scales matter.
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool improved = false;
    for (std::size_t g = 1; g < s.group_count; ++g) {
      int best_e = k[g];
      for (int e = kMinExponent; e <= kMaxExponent; ++e) {
        if (e == k[g]) continue;
        std::vector<int> trial = k;
        trial[g] = e;
        const double value = score(trial);
        if (value > best + 1e-12) {
          best = value;
          best_e = e;
        }
      }
      if (best_e != k[g]) {
        k[g] = best_e;
        improved = true;
      }
    }
    if (!improved) break;
  }
  return k;
}

// lambda_min(-sym(diag(c) A)) on the block is concave in the group scales s
// (c_v = base_v s_group(v)), so projected supergradient ascent on the simplex
// reaches its maximum where the grid search may stall. The result is rounded
// to dyadic rationals; the caller verifies it exactly.
std::optional<RatVector> simplex_ascent(const InteractionMatrix& a,
                                        const ScaleSearch& s) {
  const std::size_t groups = s.group_count;
  const std::size_t k = s.block.size();
  if (groups < 2 || k == 0) return std::nullopt;
  const RealMatrix af = to_double(a.entries());
  const std::vector<double> base = to_double(s.base);
  std::vector<Eigen::MatrixXd> parts(groups, Eigen::MatrixXd::Zero(k, k));
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) {
      const std::size_t i = s.block[p];
      const std::size_t j = s.block[q];
      parts[s.group[i]](p, q) -= 0.5 * base[i] * af(i, j);
      parts[s.group[j]](p, q) -= 0.5 * base[j] * af(j, i);
    }
  Eigen::VectorXd x = Eigen::VectorXd::Constant(groups, 1.0 / groups);
  Eigen::VectorXd best_x = x;
  double best = -std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  for (int t = 0; t < kAscentIterations; ++t) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
    for (std::size_t g = 0; g < groups; ++g) m += x[g] * parts[g];
    eig.compute(m);
    const double value = eig.eigenvalues()[0];
    if (value > best) {
      best = value;
      best_x = x;
    }
    const Eigen::VectorXd u = eig.eigenvectors().col(0);
    Eigen::VectorXd grad(groups);
    for (std::size_t g = 0; g < groups; ++g) grad[g] = u.dot(parts[g] * u);
    grad.array() -= grad.mean();  // stay on sum(x) = 1
    const double norm = grad.norm();
    if (norm == 0.0) break;
    x += (0.5 / std::sqrt(t + 1.0) / norm) * grad;
    // Euclidean projection onto the simplex.
    Eigen::VectorXd sorted = x;
    std::sort(sorted.data(), sorted.data() + groups, std::greater<double>());
    double cumulative = 0.0, theta = 0.0;
    for (std::size_t r = 0; r < groups; ++r) {
      cumulative += sorted[r];
      const double candidate = (cumulative - 1.0) / (r + 1.0);
      if (sorted[r] - candidate > 0.0) theta = candidate;
    }
    x = (x.array() - theta).max(0.0);
  }
  if (!(best > 0.0)) return std::nullopt;
  RatVector c = s.base;
  for (std::size_t v = 0; v < c.size(); ++v) {
    const double scale = std::max(best_x[s.group[v]], 1e-9);
    c[v] *= Rational(std::round(std::ldexp(scale, 40))) /
            Rational(mpz_class(1) << 40);
  }
  return c;
}

Certificate normalized(const RatVector& c) {
  return Certificate{primitive_integer_vector(c)};
}

}  // namespace

CertifyOutcome find_certificate(const InteractionMatrix& a) {
  const std::size_t n = a.size();
  const RatVector ones(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i)
    if (a(i, i) > 0)
      return RefutedAlgebra{ones, unit_vector(n, i),
                            "positive diagonal entry at vertex " +
                                std::to_string(i + 1)};

  const ColoredGraph g = build_graph(a);
  for (const Edge& e : g.edges()) {
    if (g.kind(e) != EdgeKind::kWeak) continue;
    if (a(e.u, e.v) * a(e.v, e.u) < 0) continue;
    const std::size_t white = g.is_black(e.u) ? e.v : e.u;
    const std::size_t other = white == e.u ? e.v : e.u;
    return RefutedAlgebra{
        ones, edge_witness(a, ones, white, other),
        "weak edge {" + std::to_string(e.u + 1) + "," +
            std::to_string(e.v + 1) +
            "} entries are not of strictly opposite signs; no positive "
            "scaling satisfies c_i a_ij = -c_j a_ji"};
  }

  ScaleSearch search;
  search.group.assign(n, 0);
  const ColoredGraph weak = g.weak_subgraph();
  if (is_stably_dissipative_graph(g)) {
    // Forest: propagate along each tree from its lowest vertex.
    search.base.assign(n, Rational(0));
    const auto trees = components(weak);
    search.group_count = trees.size();
    for (std::size_t t = 0; t < trees.size(); ++t) {
      const std::size_t root = trees[t].front();
      search.base[root] = 1;
      std::vector<std::size_t> stack{root};
      std::vector<bool> seen(n, false);
      seen[root] = true;
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        search.group[v] = t;
        for (std::size_t k : weak.neighbours(v)) {
          if (seen[k]) continue;
          seen[k] = true;
          search.base[k] = -search.base[v] * a(v, k) / a(k, v);
          stack.push_back(k);
        }
      }
    }
    search.block = g.black_vertices();
  } else {
    search.base = ones;
    search.group_count = n;
    for (std::size_t v = 0; v < n; ++v) search.group[v] = v;
    search.block.resize(n);
    for (std::size_t v = 0; v < n; ++v) search.block[v] = v;
  }

  const std::vector<int> k = coordinate_descent(a, search);
  const RatVector candidate = apply_exponents(search, k);
  if (verify_certificate(a, Certificate{candidate}))
    return Certified{normalized(candidate)};
  if (verify_certificate(a, Certificate{search.base}))
    return Certified{normalized(search.base)};
  if (const auto c = simplex_ascent(a, search);
      c && verify_certificate(a, Certificate{*c}))
    return Certified{normalized(*c)};
  return Unknown{"no certificate found on the 2^k scale grid (|k| <= 12) or by "
                 "concave ascent over the scales"};
}

CertifyOutcome is_stably_dissipative(const InteractionMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a(i, i) > 0)
      return RefutedGraph{"a_ii > 0 at vertex " + std::to_string(i + 1)};
  if (!is_stably_dissipative_graph(build_graph(a)))
    return RefutedGraph{"G_A has a cycle without a strong link"};
  CertifyOutcome outcome = find_certificate(a);
  if (const auto* cert = std::get_if<Certified>(&outcome)) {
    if (!is_almost_skew(a, cert->certificate))
      return Unknown{
          "dissipative, but the certificate found leaves the black block "
          "only semidefinite"};
  }
  return outcome;
}

}  // namespace lvrank
