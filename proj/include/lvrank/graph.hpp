#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lvrank/model.hpp"

namespace lvrank {

// Vertices are 0-based in the API; every textual output (JSON, DOT, CLI)
// is 1-based.

enum class Color { kBlack, kWhite };

enum class EdgeKind { kStrongLink, kWeak };

/// Undirected edge, stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  Edge() = default;
  Edge(std::size_t a, std::size_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Black-and-white interaction graph: vertex i is Black when a_ii < 0 and
/// White when a_ii = 0; {i, j} is an edge when a_ij != 0 or a_ji != 0.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  /// Duplicate edges are merged. Throws Error(kInvalidArgument) on
  /// self-loops or out-of-range endpoints.
  ColoredGraph(std::vector<Color> colors, const std::vector<Edge>& edges);

  std::size_t size() const { return colors_.size(); }
  Color color(std::size_t v) const { return colors_[v]; }
  bool is_black(std::size_t v) const { return colors_[v] == Color::kBlack; }
  const std::vector<Color>& colors() const { return colors_; }

  /// Sorted ascending.
  const std::vector<std::size_t>& neighbours(std::size_t v) const {
    return adjacency_[v];
  }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  bool has_edge(std::size_t a, std::size_t b) const;

  /// Sorted lexicographically.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  EdgeKind kind(const Edge& e) const {
    return is_black(e.u) && is_black(e.v) ? EdgeKind::kStrongLink
                                          : EdgeKind::kWeak;
  }

  std::vector<std::size_t> black_vertices() const;

  ColoredGraph without_edges(const std::vector<Edge>& removed) const;

  /// The partial graph with every strong link removed.
  ColoredGraph weak_subgraph() const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  std::vector<Color> colors_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Throws Error(kPositiveDiagonal) when some a_ii > 0.
ColoredGraph build_graph(const InteractionMatrix& a);

/// Every cycle contains a strong link, i.e. the weak subgraph is a forest.
bool is_stably_dissipative_graph(const ColoredGraph& g);

/// White vertices of degree exactly one, ascending.
std::vector<std::size_t> circ_endpoints(const ColoredGraph& g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<std::size_t>> components(const ColoredGraph& g);

/// Minimal union-find over vertex indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  /// False when a and b were already joined.
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

/// {"n": n, "black": [...], "edges": [[i, j], ...]}, 1-based.
std::string graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const std::string& text);

}  // namespace lvrank
