#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mntkit/blocks.hpp"

namespace mnt::inflate {

// A block with its designated vertex removed: the interior keeps all other
// vertices (relabelled densely), and the three former neighbours become
// degree-2 exits. exits[0] is the hub-facing one.
struct OpenedBlock {
  std::string name;
  Graph interior;
  std::array<int, 3> exits{};
};

OpenedBlock open_at(const blocks::BlockSpec& spec);

// Result of joining three opened blocks through a fresh hub vertex.
// Layout: hub is vertex 0, block i's interior occupies the next
// |interior_i| labels in order. The hub is joined to each block's first
// exit, and the remaining exits are cross-wired b_i ~ c_{i-1} (indices
// mod 3), i.e. b1c3, b2c1, b3c2.
struct Inflation {
  Graph graph;
  int hub = 0;
  std::array<std::string, 3> block_names;
  // exit_of[i] = {a_i, b_i, c_i} as vertex labels of `graph`.
  std::array<std::array<int, 3>, 3> exit_of{};
  std::string provenance;  // "# K4[...,...,...] wiring=b_i-c_{i-1}"
};

Inflation k4_inflate(const OpenedBlock& b1, const OpenedBlock& b2,
                     const OpenedBlock& b3);

// Orders reachable by the construction from the shipped block families
// (10, 22, 28, and 4k for odd k >= 5), mapped to the block-name triples
// that realise them. n_max at most 200.
std::map<int, std::vector<std::array<std::string, 3>>> achievable_orders(
    int n_max);

}  // namespace mnt::inflate
