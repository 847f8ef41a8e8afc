#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "mntkit/graph.hpp"
#include "mntkit/graph6.hpp"
#include "mntkit/ham.hpp"

using namespace mnt;
using ham::Kind;
using ham::Query;
using ham::Verdict;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Query path_query() { return Query{Kind::path, {}, {}, {}, {}}; }
Query cycle_query() { return Query{Kind::cycle, {}, {}, {}, {}}; }

bool same_verdict(const ham::Result& a, const ham::Result& b) {
  return a.verdict == b.verdict;
}

}  // namespace

TEST_SUITE("ham-engine") {

TEST_CASE("cycles and paths on C6") {
  Graph g = cycle(6);
  auto pr = ham::solve(g, path_query());
  REQUIRE(pr.verdict == Verdict::found);
  CHECK(ham::validate_witness(g, path_query(), pr.witness));

  auto cr = ham::solve(g, cycle_query());
  REQUIRE(cr.verdict == Verdict::found);
  CHECK(cr.witness.size() == 6);
  CHECK(ham::validate_witness(g, cycle_query(), cr.witness));
}

TEST_CASE("K(2,3) and K(2,4): path exists iff parts nearly balance") {
  CHECK(ham::solve(complete_bipartite(2, 3), path_query()).verdict ==
        Verdict::found);
  auto r = ham::solve(complete_bipartite(2, 4), path_query());
  CHECK(r.verdict == Verdict::none);
  CHECK(r.attestation.completed);
}

TEST_CASE("adding an edge to K(2,4) can only help") {
  // regression guard: pruning must not be fooled by denser graphs
  Graph g = complete_bipartite(2, 4);
  for (auto [u, v] : g.nonedges()) {
    Graph h = g;
    h.add_edge(u, v);
    auto r = ham::solve(h, path_query());
    ham::Result o = ham::oracle_solve(h, path_query());
    CHECK(same_verdict(r, o));
    if (r.verdict == Verdict::found)
      CHECK(ham::validate_witness(h, path_query(), r.witness));
  }
}

TEST_CASE("pinned endpoints") {
  Graph g = cycle(5);
  g.add_edge(0, 2);
  Query q = path_query();
  q.start = 1;
  q.end = 3;
  auto r = ham::solve(g, q);
  REQUIRE(r.verdict == Verdict::found);
  CHECK(r.witness.front() == 1);
  CHECK(r.witness.back() == 3);
  CHECK(ham::validate_witness(g, q, r.witness));

  // no Hamiltonian path of C5 joins adjacent vertices other than by
  // walking the whole cycle; pin two vertices at distance 2 in plain C5
  Query q2 = path_query();
  q2.start = 0;
  q2.end = 2;
  CHECK(ham::solve(cycle(5), q2).verdict == Verdict::none);
}

TEST_CASE("required edges constrain the witness") {
  Graph g = cycle(6);
  g.add_edge(0, 3);
  Query q = cycle_query();
  q.required_edges = {{0, 3}};
  auto r = ham::solve(g, q);
  CHECK(r.verdict == Verdict::none);  // chord forces two shorter cycles

  Graph h = cycle(6);
  h.add_edge(0, 3);
  h.add_edge(1, 4);
  Query q2 = cycle_query();
  q2.required_edges = {{0, 3}, {1, 4}};
  auto r2 = ham::solve(h, q2);
  // 0-3 and 1-4 both on one Hamiltonian cycle: 0 3 2 1 4 5
  REQUIRE(r2.verdict == Verdict::found);
  CHECK(ham::validate_witness(h, q2, r2.witness));
}

TEST_CASE("query validation rejects nonsense") {
  Graph g = cycle(4);
  Query q = path_query();
  q.start = 7;
  CHECK_THROWS_AS(ham::solve(g, q), ham::QueryError);
  Query q2 = path_query();
  q2.required_edges = {{0, 2}};  // not an edge of C4
  CHECK_THROWS_AS(ham::solve(g, q2), ham::QueryError);
  CHECK_THROWS_AS(ham::oracle_solve(g, q2), ham::QueryError);
  Query q3 = path_query();
  q3.start = 1;
  q3.end = 1;
  CHECK_THROWS_AS(ham::solve(g, q3), ham::QueryError);
}

TEST_CASE("witness validation is strict") {
  Graph g = cycle(5);
  Query q = path_query();
  CHECK(ham::validate_witness(g, q, {0, 1, 2, 3, 4}));
  CHECK_FALSE(ham::validate_witness(g, q, {0, 1, 2, 3}));     // short
  CHECK_FALSE(ham::validate_witness(g, q, {0, 1, 2, 4, 3}));  // non-edge hop
  CHECK_FALSE(ham::validate_witness(g, q, {0, 1, 2, 3, 3}));  // repeat
  Query qc = cycle_query();
  CHECK(ham::validate_witness(g, qc, {0, 1, 2, 3, 4}));
  CHECK_FALSE(ham::validate_witness(g, qc, {0, 1, 2, 4, 3}));  // open ends
  Query qe = path_query();
  qe.end = 2;
  CHECK_FALSE(ham::validate_witness(g, qe, {0, 1, 2, 3, 4}));
  Query qr = path_query();
  qr.required_edges = {{1, 2}};
  CHECK(ham::validate_witness(g, qr, {0, 1, 2, 3, 4}));
  qr.required_edges = {{0, 4}};
  CHECK(ham::validate_witness(g, qr, {1, 2, 3, 4, 0}));       // 4-0 on path
  CHECK_FALSE(ham::validate_witness(g, qr, {0, 1, 2, 3, 4}));  // 0-4 skipped
}

TEST_CASE("budget exhaustion is its own verdict") {
  // a graph large enough that one node is never enough
  Graph g = cycle(24);
  for (int i = 0; i < 24; i += 2) g.add_edge(i, (i + 5) % 24);
  Query q = path_query();
  q.node_budget = 1;
  auto r = ham::solve(g, q);
  CHECK(r.verdict == Verdict::budget_exhausted);
  CHECK_FALSE(r.attestation.completed);
  CHECK(r.attestation.nodes_expanded <= 2);  // the tripping node counts

  q.node_budget = std::nullopt;
  auto full = ham::solve(g, q);
  CHECK(full.verdict == Verdict::found);
  CHECK(full.attestation.completed);
}

TEST_CASE("determinism: same query, same witness and node count") {
  Graph g = complete_bipartite(3, 3);
  auto a = ham::solve(g, cycle_query());
  auto b = ham::solve(g, cycle_query());
  CHECK(a.witness == b.witness);
  CHECK(a.attestation.nodes_expanded == b.attestation.nodes_expanded);
}

TEST_CASE("solve matches the subset-DP oracle on every labeled graph, n<=6") {
  // paths and cycles, all 2^15 graphs on 6 vertices
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) pairs.emplace_back(u, v);
  for (int mask = 0; mask < (1 << 15); ++mask) {
    Graph g(6);
    for (int i = 0; i < 15; ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    for (auto kind : {Kind::path, Kind::cycle}) {
      Query q{kind, {}, {}, {}, {}};
      auto s = ham::solve(g, q);
      auto o = ham::oracle_solve(g, q);
      REQUIRE(s.verdict == o.verdict);
      if (s.verdict == Verdict::found)
        REQUIRE(ham::validate_witness(g, q, s.witness));
    }
  }
}

TEST_CASE("solve matches the oracle under random constraints") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 5 + (int)(rng() % 8);  // 5..12
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 45) g.add_edge(u, v);
    Query q;
    q.kind = (rng() % 2) ? Kind::path : Kind::cycle;
    if (q.kind == Kind::path && rng() % 2) {
      q.start = (int)(rng() % n);
      if (rng() % 2) {
        int e = (int)(rng() % n);
        if (e != *q.start) q.end = e;
      }
    }
    auto edges = g.edges();
    if (!edges.empty() && rng() % 2)
      q.required_edges.push_back(edges[rng() % edges.size()]);
    auto s = ham::solve(g, q);
    auto o = ham::oracle_solve(g, q);
    REQUIRE(s.verdict == o.verdict);
    if (s.verdict == Verdict::found)
      REQUIRE(ham::validate_witness(g, q, s.witness));
  }
}

}  // TEST_SUITE
