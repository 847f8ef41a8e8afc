#include "mntkit/blocks.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mntkit/graph6.hpp"

namespace mnt::blocks {

void validate_block(const BlockSpec& spec) {
  const Graph& g = spec.graph;
  if (!g.is_cubic())
    throw PreconditionError("block '" + spec.name + "' is not cubic");
  const int z = spec.opened_at;
  if (z < 0 || z >= g.vertex_count())
    throw PreconditionError("block '" + spec.name + "': opened vertex out of range");
  Bits128 exits;
  for (int e : spec.exits) {
    if (e < 0 || e >= g.vertex_count() || e == z)
      throw PreconditionError("block '" + spec.name + "': exit out of range");
    exits.set(e);
  }
  if (exits.count() != 3 || !(exits == g.neighbors(z)))
    throw PreconditionError("block '" + spec.name +
                            "': exits must be the three neighbours of the "
                            "opened vertex, pairwise distinct");
}

BlockSpec petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  BlockSpec spec{"petersen", std::move(g), 0, {1, 4, 5}};
  validate_block(spec);
  return spec;
}

BlockSpec coxeter() {
  Graph g(28);
  for (int i = 0; i < 7; ++i) {
    g.add_edge(i, (i + 1) % 7);
    g.add_edge(7 + i, 7 + (i + 2) % 7);
    g.add_edge(14 + i, 14 + (i + 3) % 7);
    g.add_edge(21 + i, i);
    g.add_edge(21 + i, 7 + i);
    g.add_edge(21 + i, 14 + i);
  }
  BlockSpec spec{"coxeter", std::move(g), 21, {0, 7, 14}};
  validate_block(spec);
  return spec;
}

BlockSpec flower_snark(int k) {
  if (k < 5 || k % 2 == 0)
    throw PreconditionError("flower snark parameter must be odd and >= 5, got " +
                            std::to_string(k));
  if (4 * k > Graph::kMaxVertices)
    throw PreconditionError("flower snark order " + std::to_string(4 * k) +
                            " exceeds the 128-vertex cap");
  Graph g(4 * k);
  auto centre = [](int i) { return 4 * i; };
  auto outer = [](int i) { return 4 * i + 1; };
  auto inner_u = [](int i) { return 4 * i + 2; };
  auto inner_w = [](int i) { return 4 * i + 3; };
  for (int i = 0; i < k; ++i) {
    g.add_edge(centre(i), outer(i));
    g.add_edge(centre(i), inner_u(i));
    g.add_edge(centre(i), inner_w(i));
    g.add_edge(outer(i), outer((i + 1) % k));
  }
  // One 2k-cycle through all inner leaves: u_0..u_{k-1}, w_0..w_{k-1}.
  for (int i = 0; i + 1 < k; ++i) {
    g.add_edge(inner_u(i), inner_u(i + 1));
    g.add_edge(inner_w(i), inner_w(i + 1));
  }
  g.add_edge(inner_u(k - 1), inner_w(0));
  g.add_edge(inner_w(k - 1), inner_u(0));
  BlockSpec spec{"jk=" + std::to_string(k), std::move(g), 0, {1, 2, 3}};
  validate_block(spec);
  return spec;
}

namespace {

bool parse_header(const std::string& line, int& z, std::array<int, 3>& exits) {
  std::istringstream ss(line);
  std::string tok;
  int got = 0;
  int vals[4];
  const char* keys = "zabc";
  while (ss >> tok) {
    if (got >= 4) return false;
    const std::string want = std::string(1, keys[got]) + "=";
    if (tok.rfind(want, 0) != 0) return false;
    try {
      std::size_t used = 0;
      vals[got] = std::stoi(tok.substr(2), &used);
      if (used != tok.size() - 2) return false;
    } catch (...) {
      return false;
    }
    ++got;
  }
  if (got != 4) return false;
  z = vals[0];
  exits = {vals[1], vals[2], vals[3]};
  return true;
}

}  // namespace

BlockSpec load_block_file(std::istream& in, const std::string& name) {
  std::string line;
  std::string graph6_line;
  int z = -1;
  std::array<int, 3> exits{};
  bool have_header = false;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line[0] == 'z' && parse_header(line, z, exits)) {
      if (have_header)
        throw PreconditionError("block file '" + name + "': duplicate header line");
      have_header = true;
    } else if (graph6_line.empty()) {
      graph6_line = line;
    } else {
      throw PreconditionError("block file '" + name + "': unexpected extra line");
    }
  }
  if (!have_header)
    throw PreconditionError("block file '" + name +
                            "': missing 'z=.. a=.. b=.. c=..' header line");
  if (graph6_line.empty())
    throw PreconditionError("block file '" + name + "': missing graph6 line");
  BlockSpec spec{name, from_graph6(graph6_line), z, exits};
  validate_block(spec);
  return spec;
}

BlockSpec load_block_file_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open block file '" + path + "'");
  return load_block_file(in, path);
}

void write_block_file(std::ostream& out, const BlockSpec& spec) {
  out << to_graph6(spec.graph) << "\n";
  out << "z=" << spec.opened_at << " a=" << spec.exits[0] << " b="
      << spec.exits[1] << " c=" << spec.exits[2] << "\n";
}

BlockSpec snark22(const std::string& path) {
  BlockSpec spec = load_block_file_path(path);
  if (spec.graph.vertex_count() != 22)
    throw PreconditionError("snark22 block must have exactly 22 vertices, got " +
                            std::to_string(spec.graph.vertex_count()));
  spec.name = "snark22";
  return spec;
}

}  // namespace mnt::blocks
