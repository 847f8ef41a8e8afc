#include "mntkit/dot.hpp"

#include <sstream>

namespace mnt {

std::string to_dot(const Graph& g, const DotStyle& style) {
  std::ostringstream os;
  for (const auto& c : style.comments) os << "// " << c << '\n';
  os << "graph " << style.graph_name << " {\n";
  os << "  node [shape=circle fontsize=10];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    auto fc = style.fillcolor.find(v);
    auto nt = style.note.find(v);
    const bool has_fc = fc != style.fillcolor.end();
    const bool has_nt = nt != style.note.end();
    if (has_fc || has_nt) {
      os << " [";
      if (has_nt) os << "label=\"" << v << ' ' << nt->second << '"';
      if (has_fc) {
        if (has_nt) os << ' ';
        os << "style=filled fillcolor=\"" << fc->second << '"';
      }
      os << ']';
    }
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mnt
