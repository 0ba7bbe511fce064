#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lvrank/graph.hpp"
#include "lvrank/model.hpp"

namespace lvrank {

/// One trimming at a White endpoint: every edge at the anchor (the
/// endpoint's unique neighbour) is removed except the endpoint's own edge.
struct TrimStep {
  std::size_t endpoint = 0;
  std::size_t anchor = 0;
  std::vector<Edge> removed_edges;
};

struct TrimReport {
  std::vector<TrimStep> steps;
  ColoredGraph final_graph;
  std::vector<std::size_t> discarded;  // isolated White vertices at the end
  std::size_t rank = 0;                // size() - discarded.size()
};

/// The unique neighbour of White endpoint i. Throws Error(kNotAnEndpoint).
std::size_t trim_anchor(const ColoredGraph& g, std::size_t i);

/// Throws Error(kNotAnEndpoint) unless i is a White vertex of degree one.
ColoredGraph trim_graph(const ColoredGraph& g, std::size_t i);

/// Rank-preserving Gauss elimination at White endpoint i of G_A:
///   row_j -= (a_{j,i'} / a_{i,i'}) row_i   for j != i, i'
///   col_j -= (a_{i',j} / a_{i',i}) col_i   for j != i, i'
/// which annihilates row and column i' except a_{i,i'}, a_{i',i}, a_{i',i'}.
/// Throws Error(kNotAnEndpoint), or Error(kDegenerateEndpoint) when one of
/// a_{i,i'}, a_{i',i} vanishes (impossible for dissipative A).
InteractionMatrix trim_matrix(const InteractionMatrix& a, std::size_t i);

/// White endpoints whose trimming removes at least one edge, ascending.
/// Endpoints whose anchor has degree one (a lone two-vertex component) are
/// excluded: trimming them is the identity.
std::vector<std::size_t> trimmable_endpoints(const ColoredGraph& g);

/// Chooses among the trimmable endpoints (never empty); returns an index.
using EndpointChooser =
    std::function<std::size_t(const std::vector<std::size_t>& endpoints)>;

/// Trims while some trimmable endpoint exists. The default chooser takes the
/// lowest-numbered one. Throws Error(kNotStablyDissipative).
TrimReport trim_to_core(const ColoredGraph& g,
                        const EndpointChooser& choose = {});

/// Trims at `preferred` endpoints first, in order (each must be trimmable
/// when its turn comes), then continues with the default chooser.
TrimReport trim_to_core(const ColoredGraph& g,
                        const std::vector<std::size_t>& preferred);

/// rank(G): shared rank of every dissipative matrix with graph G.
/// Throws Error(kNotStablyDissipative).
std::size_t graph_rank(const ColoredGraph& g);

/// JSON {"steps": [...], "final_edges": [...], "components": [...],
///       "discarded": [...], "rank": r}, 1-based.
std::string trim_report_to_json(const TrimReport& report);

}  // namespace lvrank
