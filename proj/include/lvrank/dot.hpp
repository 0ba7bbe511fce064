#pragma once

#include <string>

#include "lvrank/graph.hpp"
#include "lvrank/reduction.hpp"

namespace lvrank {

/// Graphviz rendering, 1-based labels, vertices and edges in ascending
/// order. Black vertices are filled; strong links are drawn bold.
std::string to_dot(const ColoredGraph& g, const std::string& name = "G");

/// As above, with each vertex labelled by its mark; Cross vertices get a
/// double outline.
std::string to_dot(const MarkedGraph& m, const std::string& name = "R");

}  // namespace lvrank
