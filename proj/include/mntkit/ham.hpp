#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mntkit/graph.hpp"

namespace mnt::ham {

// Ill-formed query: endpoints out of range, required edge absent, etc.
struct QueryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Kind { path, cycle };

// One Hamiltonian question. For paths, start/end pin the endpoints
// (unset means free); for cycles, start is only an anchor hint.
// Every required edge must lie on the reported path or cycle.
struct Query {
  Kind kind = Kind::path;
  std::optional<int> start;
  std::optional<int> end;
  std::vector<std::pair<int, int>> required_edges;
  // Search-node limit. Unset means the default policy: unlimited for
  // orders up to 40, one billion nodes above that.
  std::optional<std::uint64_t> node_budget;
};

enum class Verdict { found, none, budget_exhausted };

// How much work the search did and whether it ran to exhaustion.
// A `none` verdict is only trustworthy when completed is true; budget
// exhaustion is reported as its own verdict, never as `none`.
struct Attestation {
  std::uint64_t nodes_expanded = 0;
  bool completed = false;
};

struct Result {
  Verdict verdict = Verdict::none;
  std::vector<int> witness;  // vertex sequence; cycles omit the closing repeat
  Attestation attestation;
};

// Exact backtracking search. Deterministic: the same (graph, query) pair
// always yields the same verdict, witness, and node count.
Result solve(const Graph& g, const Query& q);

// Independent linear check that `seq` satisfies every clause of the query
// against g. Shares no code with the search.
bool validate_witness(const Graph& g, const Query& q,
                      const std::vector<int>& seq);

// Reference solver: subset dynamic programming over all 2^n vertex sets,
// for cross-checking the search in tests. Requires n plus the number of
// required edges to stay at or below 24.
Result oracle_solve(const Graph& g, const Query& q);

}  // namespace mnt::ham
