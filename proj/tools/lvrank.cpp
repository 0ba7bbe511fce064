// lvrank: command-line front end for the Lotka-Volterra structure analyses.
//
// Exit status: 0 success, 1 parse/validation error, 2 refuted, 3 unknown.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "lvrank/certify.hpp"
#include "lvrank/dot.hpp"
#include "lvrank/dynamics.hpp"
#include "lvrank/error.hpp"
#include "lvrank/foliation.hpp"
#include "lvrank/genlab.hpp"
#include "lvrank/reduction.hpp"
#include "lvrank/report.hpp"
#include "lvrank/trim.hpp"

namespace {

using lvrank::Json;

struct Flags {
  std::string format = "json";
  std::string dot;
  std::string csv;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> inputs;
  // simulate / analyze --simulate
  bool with_simulation = false;
  double t_final = 100.0;
  double step = 1e-3;
  std::size_t record_every = 10;
  std::string x0;
  std::string plane;
  // trim
  std::string prefer;
  std::size_t at = 0;
  // generate
  std::size_t count = 1;
  lvrank::GenConfig gen;
};

std::string read_input(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw lvrank::Error(lvrank::ErrorCode::kParse, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw lvrank::Error(lvrank::ErrorCode::kInvalidArgument,
                        "cannot write " + path);
  out << text;
}

void emit(const Json& j, const Flags& f) {
  if (f.format == "text")
    std::cout << lvrank::to_text(j);
  else
    std::cout << j.dump(2) << "\n";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw lvrank::Error(lvrank::ErrorCode::kParse,
                          "bad number '" + item + "'");
    }
  }
  return out;
}

// 1-based vertex list "6,4,1" -> 0-based indices.
std::vector<std::size_t> parse_vertices(const std::string& text,
                                        std::size_t n) {
  std::vector<std::size_t> out;
  for (const auto& item : split(text, ',')) {
    std::size_t v = 0;
    try {
      v = std::stoul(item);
    } catch (const std::exception&) {
      v = 0;
    }
    if (v < 1 || v > n)
      throw lvrank::Error(lvrank::ErrorCode::kParse,
                          "bad vertex '" + item + "'");
    out.push_back(v - 1);
  }
  return out;
}

lvrank::SimulationRequest simulation_request(const Flags& f, std::size_t n) {
  lvrank::SimulationRequest r;
  r.t_final = f.t_final;
  r.step = f.step;
  r.record_every = f.record_every;
  r.seed = f.seed;
  if (!f.x0.empty()) r.x0 = parse_doubles(f.x0);
  if (!f.plane.empty()) r.plane = lvrank::parse_constraints(f.plane, n);
  return r;
}

lvrank::MatrixDocument load(const Flags& f) {
  return lvrank::parse_document(read_input(f.inputs.front()));
}

int cmd_analyze(const Flags& f) {
  struct Result {
    Json body;
    int code = lvrank::kOk;
    std::string error;
  };
  if (!f.dot.empty() && f.inputs.size() != 1)
    throw lvrank::Error(lvrank::ErrorCode::kInvalidArgument,
                        "--dot needs exactly one input");
  std::vector<Result> results(f.inputs.size());
  auto run = [&](std::size_t k) {
    Result& r = results[k];
    try {
      const auto doc = lvrank::parse_document(read_input(f.inputs[k]));
      std::optional<lvrank::SimulationRequest> sim;
      if (f.with_simulation) sim = simulation_request(f, doc.matrix.size());
      auto report = lvrank::analyze_document(doc, sim);
      r.body = std::move(report.body);
      r.code = report.exit_code;
      if (!f.dot.empty() && !r.body["graph"].is_null())
        write_file(f.dot, lvrank::to_dot(lvrank::reduce_full(
                              lvrank::build_graph(doc.matrix))));
    } catch (const std::exception& e) {
      r.code = lvrank::kInputError;
      r.error = f.inputs[k] + ": " + e.what();
    }
  };
  // Files are independent; results are merged in input order.
  std::atomic<std::size_t> next{0};
  const std::size_t workers = std::max<std::size_t>(
      1, std::min(f.jobs, f.inputs.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < f.inputs.size();) run(k);
    });
  for (std::size_t k; (k = next++) < f.inputs.size();) run(k);
  for (auto& t : pool) t.join();

  int code = lvrank::kOk;
  bool failed = false;
  Json all = Json::array();
  for (const auto& r : results) {
    if (!r.error.empty()) {
      std::cerr << "error: " << r.error << "\n";
      failed = true;
      all.push_back(nullptr);
      continue;
    }
    code = std::max(code, r.code);
    all.push_back(r.body);
  }
  if (f.inputs.size() == 1) {
    if (!failed) emit(all.front(), f);
  } else {
    emit(all, f);
  }
  return failed ? lvrank::kInputError : code;
}

int cmd_graph(const Flags& f) {
  const auto g = lvrank::build_graph(load(f).matrix);
  emit(lvrank::graph_section(g), f);
  if (!f.dot.empty()) write_file(f.dot, lvrank::to_dot(g));
  return lvrank::kOk;
}

int cmd_reduce(const Flags& f) {
  const auto g = lvrank::build_graph(load(f).matrix);
  Json out = lvrank::reduction_section(g);
  out["trace"] = Json::array();
  for (const auto& step : lvrank::run_full_reduction(g).trace)
    out["trace"].push_back({{"rule", lvrank::to_string(step.rule)},
                            {"pivot", step.pivot + 1},
                            {"target", step.target + 1},
                            {"to", lvrank::to_string(step.to)}});
  emit(out, f);
  if (!f.dot.empty()) write_file(f.dot, lvrank::to_dot(lvrank::reduce_full(g)));
  return lvrank::kOk;
}

int cmd_trim(const Flags& f) {
  const auto a = load(f).matrix;
  const auto g = lvrank::build_graph(a);
  if (f.at > 0) {
    if (f.at > a.size())
      throw lvrank::Error(lvrank::ErrorCode::kInvalidArgument,
                          "--at is out of range");
    const auto t = lvrank::trim_matrix(a, f.at - 1);
    Json out = Json::parse(lvrank::render_matrix(t));
    out["exact_rank_before"] = lvrank::exact_rank(a);
    out["exact_rank_after"] = lvrank::exact_rank(t);
    emit(out, f);
    if (!f.dot.empty()) write_file(f.dot, lvrank::to_dot(lvrank::build_graph(t)));
    return lvrank::kOk;
  }
  const auto report =
      f.prefer.empty()
          ? lvrank::trim_to_core(g)
          : lvrank::trim_to_core(g, parse_vertices(f.prefer, a.size()));
  emit(Json::parse(lvrank::trim_report_to_json(report)), f);
  if (!f.dot.empty()) write_file(f.dot, lvrank::to_dot(report.final_graph));
  return lvrank::kOk;
}

int cmd_rank(const Flags& f) {
  const auto a = load(f).matrix;
  const auto g = lvrank::build_graph(a);
  const std::size_t rank = lvrank::exact_rank(a);
  Json out;
  out["exact"] = rank;
  out["graph"] = lvrank::is_stably_dissipative_graph(g)
                     ? Json(lvrank::graph_rank(g))
                     : Json(nullptr);
  out["foliation_dimension"] = rank;
  out["kernel"] = lvrank::kernel_section(a);
  emit(out, f);
  return lvrank::kOk;
}

int cmd_certify(const Flags& f) {
  const auto outcome = lvrank::is_stably_dissipative(load(f).matrix);
  emit(lvrank::certification_section(outcome), f);
  return lvrank::exit_code_for(outcome);
}

int cmd_simulate(const Flags& f) {
  const auto doc = load(f);
  const auto system = lvrank::resolve_system(doc);
  const auto request = simulation_request(f, system.size());
  std::optional<lvrank::Certificate> cert;
  const auto outcome = lvrank::find_certificate(doc.matrix);
  if (const auto* c = std::get_if<lvrank::Certified>(&outcome))
    cert = c->certificate;
  const auto trajectory = lvrank::simulate(system, request, cert);
  emit(lvrank::simulation_section(system, trajectory, request), f);
  if (!f.csv.empty()) {
    if (f.csv == "-")
      std::cout << lvrank::trajectory_csv(trajectory);
    else
      write_file(f.csv, lvrank::trajectory_csv(trajectory));
  }
  return lvrank::kOk;
}

int cmd_generate(const Flags& f) {
  for (std::size_t k = 0; k < f.count; ++k) {
    lvrank::GenConfig cfg = f.gen;
    cfg.seed = f.seed + k;
    const auto g = lvrank::random_sd_graph(cfg);
    const auto a = lvrank::sample_matrix(g, cfg);
    Json doc = Json::parse(lvrank::render_matrix(a));
    doc["q"] = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) doc["q"].push_back("1");
    // One document per line so the stream can be split into files.
    std::cout << doc.dump() << "\n";
  }
  return lvrank::kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Flags f;
  CLI::App app{"Exact structure analysis of Lotka-Volterra interaction "
               "matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", f.seed, "Seed for random starts and generation");

  auto input = [&f](CLI::App* sub, bool many) {
    auto* opt = sub->add_option("input", f.inputs,
                                "Matrix document(s); '-' reads stdin")
                    ->required();
    if (!many) opt->expected(1);
  };
  auto sim_flags = [&f](CLI::App* sub) {
    sub->add_option("--t-final", f.t_final, "Integration horizon")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--step", f.step, "RK4 step")->check(CLI::PositiveNumber);
    sub->add_option("--record-every", f.record_every,
                    "Record one sample per this many steps")
        ->check(CLI::PositiveNumber);
    sub->add_option("--x0", f.x0, "Initial state, comma separated");
    sub->add_option("--monitor-plane", f.plane,
                    "Affine constraints, e.g. x1=x4,x7=1");
  };

  auto* analyze = app.add_subcommand("analyze", "Full pipeline report");
  input(analyze, true);
  analyze->add_option("--jobs", f.jobs, "Threads across input files")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--dot", f.dot, "Write the reduced graph as DOT");
  analyze->add_flag("--simulate", f.with_simulation,
                    "Append an (empirical) simulation summary");
  sim_flags(analyze);

  auto* graph = app.add_subcommand("graph", "Colored interaction graph");
  input(graph, false);
  graph->add_option("--dot", f.dot, "Write the graph as DOT");

  auto* reduce = app.add_subcommand("reduce", "Reduction fixpoints");
  input(reduce, false);
  reduce->add_option("--dot", f.dot, "Write the reduced graph as DOT");

  auto* trim = app.add_subcommand("trim", "Trim the graph down to its core");
  input(trim, false);
  trim->add_option("--prefer", f.prefer,
                   "Endpoints to trim first, e.g. 6,4,1");
  trim->add_option("--at", f.at,
                   "Apply one matrix trimming at this endpoint instead");
  trim->add_option("--dot", f.dot, "Write the resulting graph as DOT");

  auto* rank = app.add_subcommand("rank", "Exact and graph rank, kernels");
  input(rank, false);

  auto* certify = app.add_subcommand("certify", "Stable dissipativity");
  input(certify, false);

  auto* simulate = app.add_subcommand("simulate", "RK4 trajectory");
  input(simulate, false);
  sim_flags(simulate);
  simulate->add_option("--csv", f.csv, "Write the trajectory CSV ('-': stdout)");

  auto* generate = app.add_subcommand("generate", "Random matrix documents");
  generate->add_option("--count", f.count, "Number of documents");
  generate->add_option("--n", f.gen.n, "Species")->check(CLI::PositiveNumber);
  generate->add_option("--black-fraction", f.gen.black_fraction)
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--extra-edge-prob", f.gen.extra_edge_prob)
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--strong-cycle-prob", f.gen.strong_cycle_prob)
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--magnitude-bound", f.gen.magnitude_bound)
      ->check(CLI::PositiveNumber);
  generate->add_option("--rescale", f.gen.rescale_exponent,
                       "Random diagonal rescaling by 2^k, |k| <= this")
      ->check(CLI::Range(0, 30));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? lvrank::kOk : lvrank::kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(f);
    if (*graph) return cmd_graph(f);
    if (*reduce) return cmd_reduce(f);
    if (*trim) return cmd_trim(f);
    if (*rank) return cmd_rank(f);
    if (*certify) return cmd_certify(f);
    if (*simulate) return cmd_simulate(f);
    if (*generate) return cmd_generate(f);
  } catch (const lvrank::Error& e) {
    std::cerr << "error (" << lvrank::to_string(e.code()) << "): " << e.what()
              << "\n";
    return lvrank::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lvrank::kInputError;
  }
  return lvrank::kInputError;
}
