#include "lvrank/foliation.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "lvrank/error.hpp"

namespace lvrank {

std::size_t exact_rank(const InteractionMatrix& a) {
  return exact_rank(a.entries());
}

KernelBasis kernel_basis(const InteractionMatrix& a) {
  return {nullspace(a.entries())};
}

KernelBasis kernel_basis_T(const InteractionMatrix& a) {
  return {nullspace(a.entries().transpose())};
}

namespace {

Eigen::MatrixXd to_eigen(const std::vector<RatVector>& rows, std::size_t n) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j].get_d();
  return m;
}

void require_positive(const std::vector<double>& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] > 0.0))
      throw Error(ErrorCode::kNonPositivePoint,
                  "coordinate x" + std::to_string(i + 1) + " is not positive");
}

}  // namespace

Leaf conserved_levels(const InteractionMatrix& a,
                      const std::vector<double>& x) {
  if (x.size() != a.size())
    throw Error(ErrorCode::kInvalidArgument, "point has the wrong dimension");
  require_positive(x);
  const KernelBasis w = kernel_basis_T(a);
  Leaf leaf;
  for (const auto& row : w.vectors) {
    double level = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (row[j] != 0) level += row[j].get_d() * std::log(x[j]);
    leaf.levels.push_back(level);
  }
  return leaf;
}

std::vector<double> leaf_equilibrium_intersection(
    const LVSystem& system, const Leaf& leaf, const NewtonOptions& options,
    const std::optional<std::vector<double>>& start) {
  const std::size_t n = system.size();
  const Eigen::MatrixXd w = to_eigen(kernel_basis_T(system.matrix()).vectors, n);
  const Eigen::MatrixXd v =
      to_eigen(row_space_basis(system.matrix().entries()), n);
  const auto k = static_cast<std::size_t>(w.rows());
  if (leaf.levels.size() != k)
    throw Error(ErrorCode::kInvalidArgument,
                "leaf has " + std::to_string(leaf.levels.size()) +
                    " levels, the foliation has codimension " +
                    std::to_string(k));
  Eigen::VectorXd c(static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i)
    c(static_cast<Eigen::Index>(i)) = leaf.levels[i];
  Eigen::VectorXd q(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    q(static_cast<Eigen::Index>(i)) = system.equilibrium()[i].get_d();

  Eigen::VectorXd u;
  if (start) {
    require_positive(*start);
    u.resize(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      u(static_cast<Eigen::Index>(i)) = std::log((*start)[i]);
  } else {
    u = q.array().log().matrix();
    if (k > 0) {
      const Eigen::MatrixXd gram = w * w.transpose();
      u += w.transpose() * gram.ldlt().solve(c - w * u);
    }
  }

  auto residual = [&](const Eigen::VectorXd& uu) {
    Eigen::VectorXd r(static_cast<Eigen::Index>(n));
    r.head(w.rows()) = w * uu - c;
    r.tail(v.rows()) = v * (uu.array().exp().matrix() - q);
    return r;
  };

  Eigen::VectorXd r = residual(u);
  double norm = r.lpNorm<Eigen::Infinity>();
  for (int iter = 0; iter <= options.max_iterations; ++iter) {
    if (norm <= options.tolerance) {
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i)
        x[i] = std::exp(u(static_cast<Eigen::Index>(i)));
      return x;
    }
    if (iter == options.max_iterations) break;
    Eigen::MatrixXd jac(static_cast<Eigen::Index>(n),
                        static_cast<Eigen::Index>(n));
    jac.topRows(w.rows()) = w;
    jac.bottomRows(v.rows()) = v * u.array().exp().matrix().asDiagonal();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
    if (lu.rank() < static_cast<Eigen::Index>(n))
      throw Error(ErrorCode::kSingularJacobian,
                  "Newton Jacobian is singular at iteration " +
                      std::to_string(iter));
    const Eigen::VectorXd step = lu.solve(-r);
    double lambda = 1.0;
    Eigen::VectorXd trial = u + step;
    Eigen::VectorXd trial_r = residual(trial);
    int halvings = 0;
    while (!(trial_r.lpNorm<Eigen::Infinity>() < norm) &&
           halvings < options.max_halvings) {
      lambda *= 0.5;
      trial = u + lambda * step;
      trial_r = residual(trial);
      ++halvings;
    }
    if (!(trial_r.lpNorm<Eigen::Infinity>() < norm)) break;
    u = trial;
    r = trial_r;
    norm = r.lpNorm<Eigen::Infinity>();
  }
  throw Error(ErrorCode::kNoConvergence,
              "Newton did not reach residual " +
                  std::to_string(options.tolerance) + " (last " +
                  std::to_string(norm) + ")");
}

EquilibriaSet equilibria_set(const LVSystem& system) {
  EquilibriaSet set;
  set.base = system.equilibrium();
  set.directions = kernel_basis(system.matrix());
  if (set.directions.dimension() == 1) {
    const RatVector& d = set.directions.vectors.front();
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      const Rational bound = -set.base[i] / d[i];
      if (d[i] > 0) {
        if (!set.lower || bound > *set.lower) set.lower = bound;
      } else {
        if (!set.upper || bound < *set.upper) set.upper = bound;
      }
    }
  }
  return set;
}

}  // namespace lvrank
