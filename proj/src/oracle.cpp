#include <algorithm>
#include <cstdint>
#include <vector>

#include "mntkit/ham.hpp"

namespace mnt::ham {

namespace {

// Required edges are handled by subdividing them: a degree-2 midpoint can
// only be crossed via both halves, so Hamiltonian cycles of the subdivided
// graph correspond exactly to Hamiltonian cycles through the original edge.
// For paths the midpoints are additionally barred from being endpoints.
struct DpGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;
  std::uint32_t midpoint_mask = 0;
};

DpGraph build_dp_graph(const Graph& g, const Query& q) {
  const int n0 = g.vertex_count();
  std::vector<std::pair<int, int>> req;
  for (auto [u, v] : q.required_edges) {
    auto e = std::minmax(u, v);
    req.emplace_back(e.first, e.second);
  }
  std::sort(req.begin(), req.end());
  req.erase(std::unique(req.begin(), req.end()), req.end());

  const int n = n0 + static_cast<int>(req.size());
  if (n > 24)
    throw QueryError(
        "oracle handles at most 24 vertices counting one subdivision per "
        "required edge, got " +
        std::to_string(n));

  DpGraph d;
  d.n = n;
  d.adj.assign(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n0; ++u)
    g.neighbors(u).for_each([&](int v) { d.adj[static_cast<std::size_t>(u)] |= 1u << v; });
  int next = n0;
  for (auto [u, v] : req) {
    d.adj[static_cast<std::size_t>(u)] &= ~(1u << v);
    d.adj[static_cast<std::size_t>(v)] &= ~(1u << u);
    d.adj[static_cast<std::size_t>(u)] |= 1u << next;
    d.adj[static_cast<std::size_t>(v)] |= 1u << next;
    d.adj[static_cast<std::size_t>(next)] = (1u << u) | (1u << v);
    d.midpoint_mask |= 1u << next;
    ++next;
  }
  return d;
}

// Walk the DP table backwards to a concrete vertex sequence.
std::vector<int> reconstruct(const DpGraph& d, const std::vector<std::uint32_t>& dp,
                             std::uint32_t full, int last) {
  std::vector<int> out;
  std::uint32_t mask = full;
  int cur = last;
  while (true) {
    out.push_back(cur);
    const std::uint32_t rest = mask & ~(1u << cur);
    if (rest == 0) break;
    std::uint32_t prevs = dp[rest] & d.adj[static_cast<std::size_t>(cur)];
    cur = std::countr_zero(prevs);
    mask = rest;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> project(const DpGraph& d, std::vector<int> seq) {
  std::vector<int> out;
  for (int v : seq)
    if (!((d.midpoint_mask >> v) & 1)) out.push_back(v);
  return out;
}

}  // namespace

Result oracle_solve(const Graph& g, const Query& q) {
  // Same query validation contract as solve().
  {
    const int n = g.vertex_count();
    auto check_vertex = [&](int v, const char* what) {
      if (v < 0 || v >= n)
        throw QueryError(std::string(what) + " vertex " + std::to_string(v) +
                         " out of range for order " + std::to_string(n));
    };
    if (q.start) check_vertex(*q.start, "start");
    if (q.end) check_vertex(*q.end, "end");
    if (q.kind == Kind::path && q.start && q.end && *q.start == *q.end && n > 1)
      throw QueryError("path endpoints coincide");
    for (auto [u, v] : q.required_edges) {
      check_vertex(u, "required-edge");
      check_vertex(v, "required-edge");
      if (u == v || !g.has_edge(u, v))
        throw QueryError("required edge {" + std::to_string(u) + "," +
                         std::to_string(v) + "} is not an edge");
    }
  }

  Result res;
  res.attestation.completed = true;
  const int n0 = g.vertex_count();

  if (q.kind == Kind::path && n0 == 1) {
    res.verdict = Verdict::found;
    res.witness = {0};
    return res;
  }
  if (q.kind == Kind::cycle && n0 < 3) {
    res.verdict = Verdict::none;
    return res;
  }

  const DpGraph d = build_dp_graph(g, q);
  const int n = d.n;
  const std::uint32_t full = (n == 32 ? ~0u : (1u << n) - 1);
  std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
  std::uint64_t expanded = 0;

  if (q.kind == Kind::cycle) {
    const int r = 0;
    dp[std::size_t{1} << r] = 1u << r;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (!(mask & 1u)) continue;  // only sets containing the root matter
      std::uint32_t ends = dp[mask];
      while (ends) {
        const int v = std::countr_zero(ends);
        ends &= ends - 1;
        ++expanded;
        std::uint32_t ext = d.adj[static_cast<std::size_t>(v)] & ~mask;
        while (ext) {
          const int x = std::countr_zero(ext);
          ext &= ext - 1;
          dp[mask | (1u << x)] |= 1u << x;
        }
      }
    }
    std::uint32_t finals = dp[full] & d.adj[r] & ~1u;
    res.attestation.nodes_expanded = expanded;
    if (finals) {
      res.verdict = Verdict::found;
      res.witness = project(d, reconstruct(d, dp, full, std::countr_zero(finals)));
    } else {
      res.verdict = Verdict::none;
    }
    return res;
  }

  // Path: seed the allowed start set, sweep, read off allowed end set.
  std::uint32_t startable;
  if (q.start)
    startable = 1u << *q.start;
  else
    startable = full & ~d.midpoint_mask;
  {
    std::uint32_t s = startable;
    while (s) {
      const int v = std::countr_zero(s);
      s &= s - 1;
      dp[std::size_t{1} << v] |= 1u << v;
    }
  }
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = dp[mask];
    while (ends) {
      const int v = std::countr_zero(ends);
      ends &= ends - 1;
      ++expanded;
      std::uint32_t ext = d.adj[static_cast<std::size_t>(v)] & ~mask;
      while (ext) {
        const int x = std::countr_zero(ext);
        ext &= ext - 1;
        dp[mask | (1u << x)] |= 1u << x;
      }
    }
  }
  std::uint32_t finals = dp[full];
  if (q.end)
    finals &= 1u << *q.end;
  else
    finals &= ~d.midpoint_mask;
  res.attestation.nodes_expanded = expanded;
  if (finals) {
    res.verdict = Verdict::found;
    res.witness = project(d, reconstruct(d, dp, full, std::countr_zero(finals)));
  } else {
    res.verdict = Verdict::none;
  }
  return res;
}

}  // namespace mnt::ham
