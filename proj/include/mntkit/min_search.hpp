#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mntkit/graph.hpp"
#include "mntkit/verify.hpp"

namespace mnt {

// Outcome of scanning every labeled graph of a small order for 2-connected
// maximal-nontraceable graphs: the minimum edge count and one canonical
// representative per isomorphism class of extremal graphs, sorted by
// canonical code. min_size stays empty when no graph of that order
// qualifies.
struct MinSearchResult {
  std::optional<int> min_size;
  std::vector<Graph> extremal;
  std::uint64_t graphs_considered = 0;
};

// Exhaustive by edge count: enumerates all m-edge graphs for ascending m
// and stops at the first m with a hit, so the complexity wall stays at
// order 7 (2^21 labeled graphs). Orders outside 4..7 throw
// PreconditionError.
MinSearchResult exhaustive_min_search(int n, const verify::Options& opt = {});

}  // namespace mnt
