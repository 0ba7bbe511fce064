#include "lvrank/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "lvrank/error.hpp"
#include "lvrank/foliation.hpp"

namespace lvrank {

namespace {

void require_positive(const std::vector<double>& x, ErrorCode code) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] > 0.0))
      throw Error(code, "coordinate x" + std::to_string(i + 1) +
                            " is not positive");
}

// Binary64 copy of the system, converted once.
struct Field {
  std::size_t n;
  RealMatrix a;
  std::vector<double> q;

  explicit Field(const LVSystem& s)
      : n(s.size()), a(to_double(s.matrix().entries())),
        q(to_double(s.equilibrium())) {}

  void eval(const std::vector<double>& x, std::vector<double>& out) const {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * (x[j] - q[j]);
      out[i] = x[i] * acc;
    }
  }
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<double> vector_field(const LVSystem& system,
                                 const std::vector<double>& x) {
  if (x.size() != system.size())
    throw Error(ErrorCode::kInvalidArgument, "state has the wrong dimension");
  require_positive(x, ErrorCode::kNonPositivePoint);
  std::vector<double> out(x.size());
  Field(system).eval(x, out);
  return out;
}

RatVector vector_field_exact(const LVSystem& system, const RatVector& x) {
  RatVector d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0)
      throw Error(ErrorCode::kNonPositivePoint,
                  "coordinate x" + std::to_string(i + 1) + " is not positive");
    d[i] = x[i] - system.equilibrium()[i];
  }
  RatVector out = system.matrix().entries() * d;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] *= x[i];
  return out;
}

double lyapunov_h(const LVSystem& system, const Certificate& c,
                  const std::vector<double>& x) {
  require_positive(x, ErrorCode::kNonPositivePoint);
  double h = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double qi = system.equilibrium()[i].get_d();
    h += c.c[i].get_d() * (x[i] - qi * std::log(x[i]));
  }
  return h;
}

double lyapunov_hdot(const LVSystem& system, const Certificate& c,
                     const std::vector<double>& x) {
  require_positive(x, ErrorCode::kNonPositivePoint);
  const std::size_t n = x.size();
  const Field f(system);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += f.a(i, j) * (x[j] - f.q[j]);
    total += c.c[i].get_d() * (x[i] - f.q[i]) * row;
  }
  return total;
}

double LinearConstraints::residual(const std::vector<double>& x) const {
  double worst = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += coeffs[k][j] * x[j];
    worst = std::max(worst, std::abs(lhs - rhs[k]));
  }
  return worst;
}

LinearConstraints parse_constraints(const std::string& text, std::size_t n) {
  LinearConstraints out;
  auto variable = [n](const std::string& tok) -> std::optional<std::size_t> {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X')) return std::nullopt;
    for (std::size_t p = 1; p < tok.size(); ++p)
      if (!std::isdigit(static_cast<unsigned char>(tok[p]))) return std::nullopt;
    const std::size_t v = std::stoul(tok.substr(1));
    if (v < 1 || v > n)
      throw Error(ErrorCode::kParse, "variable " + tok + " out of range");
    return v - 1;
  };
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(),
                              [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::kParse, "constraint '" + item + "' has no '='");
    const auto lhs = variable(item.substr(0, eq));
    if (!lhs)
      throw Error(ErrorCode::kParse, "constraint '" + item +
                                         "' must start with a variable xK");
    std::vector<double> row(n, 0.0);
    row[*lhs] = 1.0;
    double rhs = 0.0;
    const std::string right = item.substr(eq + 1);
    if (const auto var = variable(right)) {
      row[*var] -= 1.0;
    } else {
      try {
        std::size_t used = 0;
        rhs = std::stod(right, &used);
        if (used != right.size()) throw std::invalid_argument(right);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParse, "bad right-hand side in '" + item + "'");
      }
    }
    out.coeffs.push_back(std::move(row));
    out.rhs.push_back(rhs);
  }
  return out;
}

Trajectory integrate(const LVSystem& system, const std::vector<double>& x0,
                     const IntegrationOptions& options,
                     const Monitors& monitors) {
  const std::size_t n = system.size();
  if (x0.size() != n)
    throw Error(ErrorCode::kInvalidArgument, "x0 has the wrong dimension");
  require_positive(x0, ErrorCode::kNonPositiveStart);
  if (!(options.step > 0.0) || !(options.t_final >= 0.0) ||
      options.record_every == 0)
    throw Error(ErrorCode::kInvalidArgument,
                "need step > 0, t_final >= 0 and record_every >= 1");

  const Field field(system);
  std::vector<std::vector<double>> w;
  if (monitors.conserved_levels)
    for (const auto& row : kernel_basis_T(system.matrix()).vectors)
      w.push_back(to_double(row));

  Trajectory traj;
  auto record = [&](double t, const std::vector<double>& x) {
    traj.times.push_back(t);
    traj.states.push_back(x);
    if (monitors.lyapunov) {
      traj.h.push_back(lyapunov_h(system, *monitors.lyapunov, x));
      traj.hdot.push_back(lyapunov_hdot(system, *monitors.lyapunov, x));
    }
    if (monitors.conserved_levels) {
      std::vector<double> levels;
      for (const auto& row : w) {
        double level = 0.0;
        for (std::size_t j = 0; j < n; ++j)
          if (row[j] != 0.0) level += row[j] * std::log(x[j]);
        levels.push_back(level);
      }
      traj.levels.push_back(std::move(levels));
    }
    if (monitors.plane) traj.dist.push_back(monitors.plane->residual(x));
  };

  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n), next(n);
  // One RK4 step of size h from x into `next`; false if it leaves the orthant.
  auto rk4 = [&](const std::vector<double>& x, double h) {
    field.eval(x, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
    field.eval(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
    field.eval(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
    field.eval(tmp, k4);
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = x[i] + h / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
      if (!(next[i] > 0.0) || !std::isfinite(next[i])) return false;
    }
    return true;
  };
  // Advances x by h, splitting into halves while positivity fails.
  auto advance = [&](auto&& self, std::vector<double>& x, double h,
                     int depth) -> void {
    if (rk4(x, h)) {
      x = next;
      return;
    }
    if (depth >= options.max_halvings)
      throw Error(ErrorCode::kStepUnderflow,
                  "positivity not restored after " +
                      std::to_string(options.max_halvings) + " halvings");
    ++traj.positivity_halvings;
    self(self, x, 0.5 * h, depth + 1);
    self(self, x, 0.5 * h, depth + 1);
  };

  const auto steps =
      static_cast<std::size_t>(std::llround(options.t_final / options.step));
  std::vector<double> x = x0;
  record(0.0, x);
  for (std::size_t s = 1; s <= steps; ++s) {
    advance(advance, x, options.step, 0);
    if (s % options.record_every == 0 || s == steps)
      record(static_cast<double>(s) * options.step, x);
  }
  return traj;
}

bool check_strongly_dissipative(const LVSystem& system,
                                const Trajectory& trajectory, std::size_t i,
                                double tolerance) {
  const std::size_t m = trajectory.samples();
  if (m == 0 || i >= system.size()) return false;
  const double qi = system.equilibrium()[i].get_d();
  const std::size_t first = m - std::max<std::size_t>(1, m / 10);
  for (std::size_t s = first; s < m; ++s)
    if (!(std::abs(trajectory.states[s][i] - qi) < tolerance)) return false;
  return true;
}

std::vector<double> distance_to_attractor_plane(
    const Trajectory& trajectory, const LinearConstraints& constraints) {
  std::vector<double> out;
  out.reserve(trajectory.samples());
  for (const auto& x : trajectory.states)
    out.push_back(constraints.residual(x));
  return out;
}

double max_relative_level_drift(const Trajectory& trajectory) {
  double worst = 0.0;
  if (trajectory.levels.empty()) return worst;
  const auto& start = trajectory.levels.front();
  for (const auto& levels : trajectory.levels)
    for (std::size_t k = 0; k < levels.size(); ++k)
      worst = std::max(worst, std::abs(levels[k] - start[k]) /
                                  std::max(1.0, std::abs(start[k])));
  return worst;
}

std::string trajectory_csv(const Trajectory& trajectory) {
  std::string out = "t";
  const std::size_t n =
      trajectory.states.empty() ? 0 : trajectory.states.front().size();
  for (std::size_t i = 0; i < n; ++i) out += ",x" + std::to_string(i + 1);
  const bool has_h = !trajectory.h.empty();
  const bool has_levels = !trajectory.levels.empty();
  const bool has_dist = !trajectory.dist.empty();
  const std::size_t k = has_levels ? trajectory.levels.front().size() : 0;
  if (has_h) out += ",h,hdot";
  for (std::size_t i = 0; i < k; ++i) out += ",level" + std::to_string(i + 1);
  if (has_dist) out += ",dist";
  out += '\n';
  for (std::size_t s = 0; s < trajectory.samples(); ++s) {
    out += fmt17(trajectory.times[s]);
    for (double v : trajectory.states[s]) out += "," + fmt17(v);
    if (has_h)
      out += "," + fmt17(trajectory.h[s]) + "," + fmt17(trajectory.hdot[s]);
    for (std::size_t i = 0; i < k; ++i)
      out += "," + fmt17(trajectory.levels[s][i]);
    if (has_dist) out += "," + fmt17(trajectory.dist[s]);
    out += '\n';
  }
  return out;
}

}  // namespace lvrank
