#pragma once

#include <map>
#include <string>
#include <vector>

#include "mntkit/graph.hpp"

namespace mnt {

// Styling hooks for the Graphviz writer; everything optional.
struct DotStyle {
  std::string graph_name = "G";
  std::vector<std::string> comments;     // leading "// ..." lines
  std::map<int, std::string> fillcolor;  // vertex -> color name
  std::map<int, std::string> note;       // vertex -> text after the label
};

// Deterministic DOT text: vertices ascending, edges lexicographic.
std::string to_dot(const Graph& g, const DotStyle& style = {});

}  // namespace mnt
