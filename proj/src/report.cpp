#include "lvrank/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "lvrank/error.hpp"
#include "lvrank/foliation.hpp"
#include "lvrank/reduction.hpp"
#include "lvrank/trim.hpp"

namespace lvrank {

namespace {

Json rational_array(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json one_based(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t x : v) out.push_back(x + 1);
  return out;
}

Json double_array(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(format_double(x));
  return out;
}

Json marks_array(const MarkedGraph& m) {
  Json out = Json::array();
  for (Mark mark : m.marks()) out.push_back(to_string(mark));
  return out;
}

}  // namespace

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

LVSystem resolve_system(const MatrixDocument& doc) {
  if (!doc.q && !doc.r)
    return LVSystem(doc.matrix, RatVector(doc.matrix.size(), Rational(1)));
  return system_from_document(doc);
}

Json graph_section(const ColoredGraph& g) {
  Json out = Json::parse(graph_to_json(g));
  Json strong = Json::array();
  for (const Edge& e : g.edges())
    if (g.kind(e) == EdgeKind::kStrongLink)
      strong.push_back(Json::array({e.u + 1, e.v + 1}));
  out["strong_links"] = std::move(strong);
  out["stably_dissipative_graph"] = is_stably_dissipative_graph(g);
  out["circ_endpoints"] = one_based(circ_endpoints(g));
  return out;
}

Json certification_section(const CertifyOutcome& outcome) {
  Json out;
  out["outcome"] = outcome_name(outcome);
  std::visit(
      [&out](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Certified>) {
          out["certificate"] = rational_array(o.certificate.c);
        } else if constexpr (std::is_same_v<T, RefutedAlgebra>) {
          out["candidate"] = rational_array(o.candidate);
          out["witness"] = rational_array(o.witness);
          out["reason"] = o.reason;
        } else {
          out["reason"] = o.reason;
        }
      },
      outcome);
  return out;
}

Json reduction_section(const ColoredGraph& g) {
  const MarkedGraph full = reduce_full(g);
  const MarkedGraph simplified = reduce_simplified(g);
  Json out;
  out["full"] = {{"marks", marks_array(full)},
                 {"classification", to_string(classify(full))}};
  out["simplified"] = {
      {"marks", marks_array(simplified)},
      {"equilibria_restrictions", one_based(equilibria_restrictions(g))}};
  return out;
}

Json trim_section(const ColoredGraph& g) {
  if (!is_stably_dissipative_graph(g)) return nullptr;
  return Json::parse(trim_report_to_json(trim_to_core(g)));
}

Json kernel_section(const InteractionMatrix& a) {
  Json out;
  Json ker = Json::array();
  for (const auto& v : kernel_basis(a).vectors) ker.push_back(rational_array(v));
  Json ker_t = Json::array();
  for (const auto& v : kernel_basis_T(a).vectors)
    ker_t.push_back(rational_array(v));
  out["ker_a"] = std::move(ker);
  out["ker_a_transpose"] = std::move(ker_t);
  return out;
}

std::vector<double> initial_state(const LVSystem& system,
                                  const SimulationRequest& request) {
  if (request.x0) {
    if (request.x0->size() != system.size())
      throw Error(ErrorCode::kInvalidArgument,
                  "x0 has " + std::to_string(request.x0->size()) +
                      " entries, the system has " +
                      std::to_string(system.size()));
    return *request.x0;
  }
  std::mt19937_64 rng(request.seed);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  std::vector<double> x(system.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = system.equilibrium()[i].get_d() * u(rng);
  return x;
}

Trajectory simulate(const LVSystem& system, const SimulationRequest& request,
                    const std::optional<Certificate>& certificate) {
  IntegrationOptions options;
  options.t_final = request.t_final;
  options.step = request.step;
  options.record_every = request.record_every;
  Monitors monitors;
  monitors.lyapunov = certificate;
  monitors.conserved_levels = true;
  monitors.plane = request.plane;
  return integrate(system, initial_state(system, request), options, monitors);
}

Json simulation_section(const LVSystem& system, const Trajectory& trajectory,
                        const SimulationRequest& request) {
  Json out;
  out["empirical"] = true;
  out["t_final"] = format_double(request.t_final);
  out["step"] = format_double(request.step);
  out["samples"] = trajectory.samples();
  out["positivity_halvings"] = trajectory.positivity_halvings;
  out["x0"] = double_array(trajectory.states.front());
  out["x_final"] = double_array(trajectory.states.back());
  double dist_q = 0.0;
  for (std::size_t i = 0; i < system.size(); ++i)
    dist_q = std::max(dist_q, std::abs(trajectory.states.back()[i] -
                                       system.equilibrium()[i].get_d()));
  out["max_abs_x_final_minus_q"] = format_double(dist_q);
  out["max_relative_level_drift"] =
      format_double(max_relative_level_drift(trajectory));
  if (!trajectory.h.empty()) {
    double worst = 0.0;
    for (std::size_t s = 1; s < trajectory.h.size(); ++s)
      worst = std::max(worst, trajectory.h[s] - trajectory.h[s - 1]);
    out["lyapunov"] = {{"h_initial", format_double(trajectory.h.front())},
                       {"h_final", format_double(trajectory.h.back())},
                       {"max_sample_increase", format_double(worst)}};
  }
  if (!trajectory.dist.empty())
    out["plane_residual_final"] = format_double(trajectory.dist.back());
  return out;
}

int exit_code_for(const CertifyOutcome& outcome) {
  if (std::holds_alternative<Certified>(outcome)) return kOk;
  if (std::holds_alternative<Unknown>(outcome)) return kUnknown;
  return kRefuted;
}

AnalysisReport analyze_document(
    const MatrixDocument& doc,
    const std::optional<SimulationRequest>& simulation) {
  const InteractionMatrix& a = doc.matrix;
  const LVSystem system = resolve_system(doc);
  AnalysisReport report;
  Json& body = report.body;
  std::string canonical = render_matrix(a);
  for (const auto& q : system.equilibrium()) canonical += " " + to_string(q);
  body["input_digest"] = fnv1a_digest(canonical);
  body["n"] = a.size();
  body["equilibrium"] = rational_array(system.equilibrium());

  const CertifyOutcome outcome = is_stably_dissipative(a);
  report.exit_code = exit_code_for(outcome);
  bool positive_diagonal = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    positive_diagonal = positive_diagonal || a(i, i) > 0;

  // With a positive diagonal entry there is no graph to speak of.
  std::optional<ColoredGraph> g;
  if (!positive_diagonal) g = build_graph(a);
  const std::size_t rank = exact_rank(a);
  body["graph"] = g ? graph_section(*g) : Json(nullptr);
  body["certification"] = certification_section(outcome);
  body["reduction"] = g ? reduction_section(*g) : Json(nullptr);
  body["trim"] = g ? trim_section(*g) : Json(nullptr);
  body["rank"] = {{"exact", rank},
                  {"graph", g && is_stably_dissipative_graph(*g)
                                ? Json(graph_rank(*g))
                                : Json(nullptr)}};
  body["kernel"] = kernel_section(a);
  body["foliation_dimension"] = rank;

  if (simulation) {
    std::optional<Certificate> cert;
    if (const auto* c = std::get_if<Certified>(&outcome))
      cert = c->certificate;
    const Trajectory t = simulate(system, *simulation, cert);
    body["simulation"] = simulation_section(system, t, *simulation);
  }
  return report;
}

namespace {

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(),
              out);
    return;
  }
  if (j.is_array() &&
      std::any_of(j.begin(), j.end(),
                  [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  std::string value;
  if (j.is_string()) {
    value = j.get<std::string>();
  } else if (j.is_array()) {
    value = "(";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) value += ", ";
      value += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
    }
    value += ")";
  } else {
    value = j.dump();
  }
  out += path + ": " + value + "\n";
}

}  // namespace

std::string to_text(const Json& report) {
  std::string out;
  flatten(report, "", out);
  return out;
}

}  // namespace lvrank
