#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lvrank/certify.hpp"
#include "lvrank/dynamics.hpp"
#include "lvrank/graph.hpp"
#include "lvrank/model.hpp"

namespace lvrank {

// Report sections shared by the command-line front end and the tests. All
// objects are insertion-ordered and every float is a "%.17g" string, so a
// given input always serializes to the same bytes.
using Json = nlohmann::ordered_json;

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_digest(std::string_view bytes);
std::string format_double(double v);

/// The system of a document; with neither "q" nor "r", q = (1, ..., 1).
LVSystem resolve_system(const MatrixDocument& doc);

Json graph_section(const ColoredGraph& g);
Json certification_section(const CertifyOutcome& outcome);
Json reduction_section(const ColoredGraph& g);
/// Null when the graph is not stably dissipative.
Json trim_section(const ColoredGraph& g);
Json kernel_section(const InteractionMatrix& a);

struct SimulationRequest {
  double t_final = 100.0;
  double step = 1e-3;
  std::size_t record_every = 10;
  std::optional<std::vector<double>> x0;  // default: random from seed
  std::uint64_t seed = 0;
  std::optional<LinearConstraints> plane;
};

/// x0 when given (checked for size), else q_i * u_i with u_i uniform in
/// [1/2, 3/2) drawn from the seed.
std::vector<double> initial_state(const LVSystem& system,
                                  const SimulationRequest& request);

/// Runs the integration with every applicable monitor.
Trajectory simulate(const LVSystem& system, const SimulationRequest& request,
                    const std::optional<Certificate>& certificate);
Json simulation_section(const LVSystem& system, const Trajectory& trajectory,
                        const SimulationRequest& request);

/// Exit statuses of the front end.
enum ExitCode : int { kOk = 0, kInputError = 1, kRefuted = 2, kUnknown = 3 };

int exit_code_for(const CertifyOutcome& outcome);

struct AnalysisReport {
  Json body;
  int exit_code = kOk;
};

/// The full pipeline: graph, certification, reductions, trimming, ranks,
/// kernels and, when requested, a simulation summary.
AnalysisReport analyze_document(
    const MatrixDocument& doc,
    const std::optional<SimulationRequest>& simulation = std::nullopt);

/// One "path: value" line per scalar, in report order.
std::string to_text(const Json& report);

}  // namespace lvrank
