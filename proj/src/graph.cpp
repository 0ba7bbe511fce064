#include "lvrank/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>

#include "lvrank/error.hpp"

namespace lvrank {

ColoredGraph::ColoredGraph(std::vector<Color> colors,
                           const std::vector<Edge>& edges)
    : colors_(std::move(colors)), adjacency_(colors_.size()) {
  const std::size_t n = colors_.size();
  for (const Edge& e : edges) {
    if (e.u == e.v)
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at vertex " + std::to_string(e.u + 1));
    if (e.v >= n)
      throw Error(ErrorCode::kInvalidArgument,
                  "edge endpoint " + std::to_string(e.v + 1) +
                      " out of range");
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

bool ColoredGraph::has_edge(std::size_t a, std::size_t b) const {
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t ColoredGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency_) twice += nb.size();
  return twice / 2;
}

std::vector<std::size_t> ColoredGraph::black_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v)
    if (is_black(v)) out.push_back(v);
  return out;
}

ColoredGraph ColoredGraph::without_edges(
    const std::vector<Edge>& removed) const {
  std::vector<Edge> kept;
  for (const Edge& e : edges())
    if (std::find(removed.begin(), removed.end(), e) == removed.end())
      kept.push_back(e);
  return ColoredGraph(colors_, kept);
}

ColoredGraph ColoredGraph::weak_subgraph() const {
  std::vector<Edge> weak;
  for (const Edge& e : edges())
    if (kind(e) == EdgeKind::kWeak) weak.push_back(e);
  return ColoredGraph(colors_, weak);
}

ColoredGraph build_graph(const InteractionMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Color> colors(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) > 0)
      throw Error(ErrorCode::kPositiveDiagonal,
                  "a_" + std::to_string(i + 1) + std::to_string(i + 1) +
                      " > 0: matrix cannot be dissipative (vertex " +
                      std::to_string(i + 1) + ")");
    colors[i] = a(i, i) < 0 ? Color::kBlack : Color::kWhite;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a(i, j) != 0 || a(j, i) != 0) edges.emplace_back(i, j);
  return ColoredGraph(std::move(colors), edges);
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

bool is_stably_dissipative_graph(const ColoredGraph& g) {
  DisjointSets sets(g.size());
  for (const Edge& e : g.edges()) {
    if (g.kind(e) == EdgeKind::kStrongLink) continue;
    if (!sets.unite(e.u, e.v)) return false;
  }
  return true;
}

std::vector<std::size_t> circ_endpoints(const ColoredGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!g.is_black(v) && g.degree(v) == 1) out.push_back(v);
  return out;
}

std::vector<std::vector<std::size_t>> components(const ColoredGraph& g) {
  DisjointSets sets(g.size());
  for (const Edge& e : g.edges()) sets.unite(e.u, e.v);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(g.size(), g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    const std::size_t root = sets.find(v);
    if (slot[root] == g.size()) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

std::string graph_to_json(const ColoredGraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.size();
  auto black = nlohmann::ordered_json::array();
  for (auto v : g.black_vertices()) black.push_back(v + 1);
  doc["black"] = black;
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  doc["edges"] = edges;
  return doc.dump();
}

ColoredGraph graph_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    const std::size_t n = doc.at("n").get<std::size_t>();
    std::vector<Color> colors(n, Color::kWhite);
    for (const auto& b : doc.at("black")) {
      const auto v = b.get<std::size_t>();
      if (v < 1 || v > n)
        throw Error(ErrorCode::kParse, "black vertex out of range");
      colors[v - 1] = Color::kBlack;
    }
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      const auto a = e.at(0).get<std::size_t>();
      const auto b = e.at(1).get<std::size_t>();
      if (a < 1 || b < 1)
        throw Error(ErrorCode::kParse, "edge endpoint out of range");
      edges.emplace_back(a - 1, b - 1);
    }
    return ColoredGraph(std::move(colors), edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid graph JSON: ") + e.what());
  }
}

}  // namespace lvrank
