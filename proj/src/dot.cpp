#include "lvrank/dot.hpp"

#include <sstream>

namespace lvrank {

namespace {

void write_edges(std::ostringstream& out, const ColoredGraph& g) {
  for (const Edge& e : g.edges()) {
    out << "  " << e.u + 1 << " -- " << e.v + 1;
    if (g.kind(e) == EdgeKind::kStrongLink) out << " [style=bold]";
    out << ";\n";
  }
}

const char* mark_glyph(Mark m) {
  switch (m) {
    case Mark::kBullet: return "\xE2\x80\xA2";  // •
    case Mark::kCross: return "\xE2\x8A\x95";   // ⊕
    default: return "\xE2\x88\x98";             // ∘
  }
}

}  // namespace

std::string to_dot(const ColoredGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    out << "  " << v + 1;
    if (g.is_black(v))
      out << " [style=filled, fillcolor=black, fontcolor=white]";
    out << ";\n";
  }
  write_edges(out, g);
  out << "}\n";
  return out.str();
}

std::string to_dot(const MarkedGraph& m, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < m.size(); ++v) {
    out << "  " << v + 1 << " [label=\"" << v + 1 << mark_glyph(m.mark(v))
        << "\"";
    if (m.mark(v) == Mark::kBullet)
      out << ", style=filled, fillcolor=black, fontcolor=white";
    else if (m.mark(v) == Mark::kCross)
      out << ", shape=doublecircle";
    out << "];\n";
  }
  write_edges(out, m.base());
  out << "}\n";
  return out.str();
}

}  // namespace lvrank
