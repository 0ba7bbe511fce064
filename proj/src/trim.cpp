#include "lvrank/trim.hpp"

#include <json.hpp>

#include <algorithm>

#include "lvrank/error.hpp"

namespace lvrank {

std::size_t trim_anchor(const ColoredGraph& g, std::size_t i) {
  if (i >= g.size() || g.is_black(i) || g.degree(i) != 1)
    throw Error(ErrorCode::kNotAnEndpoint,
                "vertex " + std::to_string(i + 1) +
                    " is not a white endpoint (white, degree one)");
  return g.neighbours(i).front();
}

ColoredGraph trim_graph(const ColoredGraph& g, std::size_t i) {
  const std::size_t anchor = trim_anchor(g, i);
  std::vector<Edge> removed;
  for (std::size_t k : g.neighbours(anchor))
    if (k != i) removed.emplace_back(anchor, k);
  return g.without_edges(removed);
}

InteractionMatrix trim_matrix(const InteractionMatrix& a, std::size_t i) {
  const std::size_t n = a.size();
  if (i >= n || a(i, i) != 0)
    throw Error(ErrorCode::kNotAnEndpoint,
                "vertex " + std::to_string(i + 1) + " is not white");
  std::size_t anchor = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i || (a(i, j) == 0 && a(j, i) == 0)) continue;
    if (anchor != n)
      throw Error(ErrorCode::kNotAnEndpoint,
                  "vertex " + std::to_string(i + 1) + " has degree > 1");
    anchor = j;
  }
  if (anchor == n)
    throw Error(ErrorCode::kNotAnEndpoint,
                "vertex " + std::to_string(i + 1) + " is isolated");
  const Rational& row_pivot = a(i, anchor);  // only nonzero of row i
  const Rational& col_pivot = a(anchor, i);  // only nonzero of column i
  if (row_pivot == 0 || col_pivot == 0)
    throw Error(ErrorCode::kDegenerateEndpoint,
                "a_{i,i'} and a_{i',i} must both be nonzero at endpoint " +
                    std::to_string(i + 1));

  RatMatrix m = a.entries();
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i || j == anchor || m(j, anchor) == 0) continue;
    const Rational f = m(j, anchor) / row_pivot;
    for (std::size_t k = 0; k < n; ++k) m(j, k) -= f * m(i, k);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i || j == anchor || m(anchor, j) == 0) continue;
    const Rational f = m(anchor, j) / col_pivot;
    for (std::size_t k = 0; k < n; ++k) m(k, j) -= f * m(k, i);
  }
  return InteractionMatrix(std::move(m));
}

std::vector<std::size_t> trimmable_endpoints(const ColoredGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v : circ_endpoints(g))
    if (g.degree(g.neighbours(v).front()) > 1) out.push_back(v);
  return out;
}

namespace {

TrimReport finish(const ColoredGraph& g, std::vector<TrimStep> steps,
                  ColoredGraph current) {
  TrimReport report;
  report.steps = std::move(steps);
  for (std::size_t v = 0; v < current.size(); ++v)
    if (!current.is_black(v) && current.degree(v) == 0)
      report.discarded.push_back(v);
  report.rank = g.size() - report.discarded.size();
  report.final_graph = std::move(current);
  return report;
}

TrimStep step_at(const ColoredGraph& g, std::size_t endpoint) {
  TrimStep step;
  step.endpoint = endpoint;
  step.anchor = trim_anchor(g, endpoint);
  for (std::size_t k : g.neighbours(step.anchor))
    if (k != endpoint) step.removed_edges.emplace_back(step.anchor, k);
  return step;
}

void require_stably_dissipative(const ColoredGraph& g) {
  if (!is_stably_dissipative_graph(g))
    throw Error(ErrorCode::kNotStablyDissipative,
                "graph has a cycle without a strong link");
}

TrimReport trim_with(const ColoredGraph& g,
                     const std::vector<std::size_t>& preferred,
                     const EndpointChooser& choose) {
  require_stably_dissipative(g);
  ColoredGraph current = g;
  std::vector<TrimStep> steps;
  auto apply = [&](std::size_t endpoint) {
    TrimStep step = step_at(current, endpoint);
    current = current.without_edges(step.removed_edges);
    steps.push_back(std::move(step));
  };
  for (std::size_t endpoint : preferred) {
    const auto candidates = trimmable_endpoints(current);
    if (std::find(candidates.begin(), candidates.end(), endpoint) ==
        candidates.end())
      throw Error(ErrorCode::kNotAnEndpoint,
                  "vertex " + std::to_string(endpoint + 1) +
                      " is not a trimmable white endpoint at this stage");
    apply(endpoint);
  }
  for (;;) {
    const auto candidates = trimmable_endpoints(current);
    if (candidates.empty()) break;
    apply(candidates.at(choose ? choose(candidates) : 0));
  }
  return finish(g, std::move(steps), std::move(current));
}

}  // namespace

TrimReport trim_to_core(const ColoredGraph& g, const EndpointChooser& choose) {
  return trim_with(g, {}, choose);
}

TrimReport trim_to_core(const ColoredGraph& g,
                        const std::vector<std::size_t>& preferred) {
  return trim_with(g, preferred, {});
}

std::size_t graph_rank(const ColoredGraph& g) { return trim_to_core(g).rank; }

std::string trim_report_to_json(const TrimReport& report) {
  using ojson = nlohmann::ordered_json;
  ojson doc;
  ojson steps = ojson::array();
  for (const auto& s : report.steps) {
    ojson step;
    step["endpoint"] = s.endpoint + 1;
    step["anchor"] = s.anchor + 1;
    ojson removed = ojson::array();
    for (const auto& e : s.removed_edges) removed.push_back({e.u + 1, e.v + 1});
    step["removed_edges"] = removed;
    steps.push_back(step);
  }
  doc["steps"] = steps;
  ojson edges = ojson::array();
  for (const auto& e : report.final_graph.edges())
    edges.push_back({e.u + 1, e.v + 1});
  doc["final_edges"] = edges;
  ojson comps = ojson::array();
  for (const auto& c : components(report.final_graph)) {
    ojson comp = ojson::array();
    for (auto v : c) comp.push_back(v + 1);
    comps.push_back(comp);
  }
  doc["components"] = comps;
  ojson discarded = ojson::array();
  for (auto v : report.discarded) discarded.push_back(v + 1);
  doc["discarded"] = discarded;
  doc["rank"] = report.rank;
  return doc.dump();
}

}  // namespace lvrank
