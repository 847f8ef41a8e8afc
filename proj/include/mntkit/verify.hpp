#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mntkit/blocks.hpp"
#include "mntkit/certificate.hpp"
#include "mntkit/graph.hpp"

namespace mnt::verify {

// Knobs shared by all certification runs. Worker count only affects wall
// time: sweeps are assembled in a fixed order, so certificates come out
// byte-identical for every worker count. The node budget is forwarded to
// each individual solver query (unset = the solver's own default policy).
struct Options {
  int workers = 1;
  std::optional<std::uint64_t> node_budget;
};

// Exact answers with an honest third state: a query that blows its node
// budget is reported as unknown, never coerced to no.
enum class Tri { yes, no, unknown };

Tri is_hamiltonian(const Graph& g, const Options& opt = {});
Tri is_traceable(const Graph& g, const Options& opt = {});

// Maximal nontraceable: g has no Hamiltonian path, but g+uv has one for
// every non-edge uv. The certificate stores one attestation for the
// negative part and one path witness per non-edge; non-edges are swept in
// lexicographic order and the first failure refutes.
Certificate is_mnt(const Graph& g, const Options& opt = {});

// Maximal nonhamiltonian: the cycle analogue of is_mnt.
Certificate is_mnh(const Graph& g, const Options& opt = {});

// Nonhamiltonian, but every vertex deletion is hamiltonian. One cycle
// witness per deleted vertex, recorded in the labels of g.
Certificate is_hypohamiltonian(const Graph& g, const Options& opt = {});

// MNH and hypohamiltonian combined, sharing one nonhamiltonicity
// attestation; this is the property the construction blocks must have.
Certificate is_mhh(const Graph& g, const Options& opt = {});
Certificate is_mhh(const blocks::BlockSpec& block, const Options& opt = {});

// For every u outside N[z]: H+zu has a Hamiltonian cycle through both za
// and zu, and (H+zu)-za has one through zu. This is deliberately a little
// stronger than asking for cycles through/avoiding za alone: any witness
// pair here also witnesses the weaker reading, and the through-zu form is
// what the inflation's path arguments actually consume.
Certificate condition_C(const blocks::BlockSpec& block, const Options& opt = {});

// For every z, every u in N(z) and every v not adjacent to either: H+uv
// has a Hamiltonian cycle through uz. Rejects blocks that are not MHH
// (PreconditionError) — on a hamiltonian input the sweep would be
// vacuously empty, which must not read as certified.
Certificate extended_condition(const blocks::BlockSpec& block,
                               const Options& opt = {});

// Facts about the opened block F = H - z that the construction's proof
// leans on, checked by sweep: (a) F has a Hamiltonian path ending at every
// vertex; (b) none with both ends among the exits; (c) F-y is traceable
// between the other two exits for each exit y; and for every non-edge uv
// of F, F+uv has a Hamiltonian path with both ends among the exits.
// Rejects blocks that are not MHH (PreconditionError).
Certificate lemma_hypo_paths_check(const blocks::BlockSpec& block,
                                   const Options& opt = {});

// Conjunction certificate for the constructed graphs: cubic, 2-connected,
// and MNT, with order, size and girth recorded as replayable facts.
Certificate certify_cubic_mnt(const Graph& g, const Options& opt = {});

// Minimum size of a 2-connected MNT graph with m degree-2 vertices.
int edge_bound(int n, int m);

// |E(g)| >= edge_bound(n, #degree-2 vertices). PreconditionError unless g
// is 2-connected with n >= 7 and mnt_cert is a certified MNT (or cubic-MNT)
// certificate for exactly this graph.
bool bound_check(const Graph& g, const Certificate& mnt_cert);

// Structural consequences of maximality around degree-2 vertices. Sound
// as a refuter: any violation proves the input was not a 2-connected MNT
// graph; a clean report is what certified instances must produce.
struct Deg2Report {
  bool ok = true;
  std::vector<std::string> violations;
};
Deg2Report deg2_structure_check(const Graph& g);

// For a path q in g whose vertex set induces a non-complete subgraph,
// some internal vertex of q must have a neighbour outside q. Requires a
// certified MNT certificate for g; throws PreconditionError when the
// certificate does not match, q is not a path, or <V(q)> is complete.
bool lemma_subgraph_check(const Graph& g, const Certificate& mnt_cert,
                          const std::vector<int>& q);

// Runs lemma_subgraph_check over every path of g with at most max_edges
// edges (paths whose vertex set induces a complete subgraph are skipped,
// as the lemma does not apply to them).
struct PathSweep {
  std::uint64_t paths_checked = 0;
  std::uint64_t skipped_complete = 0;
  bool all_hold = true;
  std::vector<int> counterexample;  // first failing path, empty if none
};
PathSweep lemma_subgraph_sweep(const Graph& g, const Certificate& mnt_cert,
                               int max_edges);

}  // namespace mnt::verify
