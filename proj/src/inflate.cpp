#include "mntkit/inflate.hpp"

#include <algorithm>

namespace mnt::inflate {

OpenedBlock open_at(const blocks::BlockSpec& spec) {
  blocks::validate_block(spec);
  auto cut = spec.graph.delete_vertex(spec.opened_at);
  OpenedBlock open{spec.name, std::move(cut.graph), {}};
  for (int i = 0; i < 3; ++i)
    open.exits[static_cast<std::size_t>(i)] =
        cut.old_to_new[static_cast<std::size_t>(spec.exits[static_cast<std::size_t>(i)])];
  for (int e : open.exits)
    if (open.interior.degree(e) != 2)
      throw PreconditionError("opened block '" + spec.name +
                              "' has an exit of degree != 2");
  return open;
}

Inflation k4_inflate(const OpenedBlock& b1, const OpenedBlock& b2,
                     const OpenedBlock& b3) {
  const OpenedBlock* bs[3] = {&b1, &b2, &b3};
  int n = 1;
  int offset[3];
  for (int i = 0; i < 3; ++i) {
    offset[i] = n;
    n += bs[i]->interior.vertex_count();
  }
  if (n > Graph::kMaxVertices)
    throw PreconditionError("inflation order " + std::to_string(n) +
                            " exceeds the 128-vertex cap");

  Inflation out{Graph(n), 0, {}, {}, {}};
  for (int i = 0; i < 3; ++i) {
    const Graph& f = bs[i]->interior;
    for (auto [u, v] : f.edges())
      out.graph.add_edge(offset[i] + u, offset[i] + v);
    for (int e = 0; e < 3; ++e)
      out.exit_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] =
          offset[i] + bs[i]->exits[static_cast<std::size_t>(e)];
    out.block_names[static_cast<std::size_t>(i)] = bs[i]->name;
  }
  for (int i = 0; i < 3; ++i) {
    out.graph.add_edge(out.hub, out.exit_of[static_cast<std::size_t>(i)][0]);
    // b_i to c_{i-1}: (b1,c3), (b2,c1), (b3,c2)
    const int prev = (i + 2) % 3;
    out.graph.add_edge(out.exit_of[static_cast<std::size_t>(i)][1],
                       out.exit_of[static_cast<std::size_t>(prev)][2]);
  }
  out.provenance = "# K4[" + b1.name + "," + b2.name + "," + b3.name +
                   "] wiring=b_i-c_{i-1}";
  return out;
}

std::map<int, std::vector<std::array<std::string, 3>>> achievable_orders(
    int n_max) {
  if (n_max < 1 || n_max > 200)
    throw PreconditionError("achievable_orders takes n_max in [1, 200], got " +
                            std::to_string(n_max));
  // Candidate blocks as (order, name), ordered so emitted triples read
  // smallest-first.
  std::vector<std::pair<int, std::string>> cand = {
      {10, "petersen"}, {22, "snark22"}, {28, "coxeter"}};
  for (int k = 5; 4 * k <= n_max; k += 2)
    cand.emplace_back(4 * k, "jk=" + std::to_string(k));
  std::sort(cand.begin(), cand.end());

  std::map<int, std::vector<std::array<std::string, 3>>> table;
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i; j < cand.size(); ++j)
      for (std::size_t k = j; k < cand.size(); ++k) {
        const int n = cand[i].first + cand[j].first + cand[k].first - 2;
        if (n > n_max) continue;
        table[n].push_back({cand[i].second, cand[j].second, cand[k].second});
      }
  return table;
}

}  // namespace mnt::inflate
