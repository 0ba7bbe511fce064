#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lvrank/certify.hpp"
#include "lvrank/model.hpp"

namespace lvrank {

/// x * A (x - q), evaluated in binary64. Throws Error(kNonPositivePoint).
std::vector<double> vector_field(const LVSystem& system,
                                 const std::vector<double>& x);

/// Exact evaluation at a rational point (used to check equilibria).
RatVector vector_field_exact(const LVSystem& system, const RatVector& x);

/// h(x) = sum_i c_i (x_i - q_i log x_i). Throws Error(kNonPositivePoint).
double lyapunov_h(const LVSystem& system, const Certificate& c,
                  const std::vector<double>& x);

/// dh/dt = (x - q)^T diag(c) A (x - q). Throws Error(kNonPositivePoint).
double lyapunov_hdot(const LVSystem& system, const Certificate& c,
                     const std::vector<double>& x);

/// Linear equalities sum_j coeffs[k][j] x_j = rhs[k], e.g. an attractor
/// plane. Residual is the max-norm over the rows.
struct LinearConstraints {
  std::vector<std::vector<double>> coeffs;
  std::vector<double> rhs;

  double residual(const std::vector<double>& x) const;
};

/// Parses "x1=x4,x2=x5,x7=1" (1-based; right side a variable or a number).
LinearConstraints parse_constraints(const std::string& text, std::size_t n);

/// What to evaluate at every recorded sample.
struct Monitors {
  std::optional<Certificate> lyapunov;       // h and dh/dt
  bool conserved_levels = false;             // W log x, W from Ker(A^T)
  std::optional<LinearConstraints> plane;    // distance to an affine set
};

struct IntegrationOptions {
  double t_final = 1.0;
  double step = 1e-3;
  std::size_t record_every = 1;  // record one sample per this many steps
  int max_halvings = 40;
};

/// Sampled solution. Monitor series are empty when not requested. The
/// initial state is always sample 0.
struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  std::vector<double> h;
  std::vector<double> hdot;
  std::vector<std::vector<double>> levels;
  std::vector<double> dist;
  std::size_t positivity_halvings = 0;

  std::size_t samples() const { return times.size(); }
};

/// Classical fixed-step RK4. When a step would leave the open orthant it is
/// replaced by two half steps, recursively, up to max_halvings levels deep.
/// Deterministic for given inputs. Throws Error(kNonPositiveStart),
/// Error(kStepUnderflow), Error(kInvalidArgument).
Trajectory integrate(const LVSystem& system, const std::vector<double>& x0,
                     const IntegrationOptions& options,
                     const Monitors& monitors = {});

/// Empirical probe: |x_i(t) - q_i| < tolerance over the final 10% of the
/// samples.
bool check_strongly_dissipative(const LVSystem& system,
                                const Trajectory& trajectory, std::size_t i,
                                double tolerance);

/// Max-norm constraint residual at each sample; all zeros when there are
/// no constraints.
std::vector<double> distance_to_attractor_plane(
    const Trajectory& trajectory, const LinearConstraints& constraints);

/// Largest |L_k(t) - L_k(0)| / max(1, |L_k(0)|) over samples and levels k.
double max_relative_level_drift(const Trajectory& trajectory);

/// CSV with header t,x1..xn,h,hdot,level1..levelk,dist; 17 significant
/// digits. Columns of monitors that were not requested are omitted.
std::string trajectory_csv(const Trajectory& trajectory);

}  // namespace lvrank
