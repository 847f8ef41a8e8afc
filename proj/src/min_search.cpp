#include "mntkit/min_search.hpp"

#include <algorithm>
#include <numeric>

#include "mntkit/ham.hpp"

namespace mnt {

namespace {

// Nontraceable, and adding any non-edge makes it traceable. Uses the
// solver directly — at order <= 7 every query is exact and instant, no
// certificate plumbing needed inside the enumeration loop.
bool is_mnt_graph(const Graph& g) {
  ham::Query q;
  q.kind = ham::Kind::path;
  if (ham::solve(g, q).verdict != ham::Verdict::none) return false;
  for (auto [u, v] : g.nonedges()) {
    Graph h = g;
    h.add_edge(u, v);
    if (ham::solve(h, q).verdict != ham::Verdict::found) return false;
  }
  return true;
}

std::uint32_t perm_code(const Graph& g, const std::vector<int>& perm,
                        const std::vector<std::pair<int, int>>& pairs) {
  std::uint32_t code = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (g.has_edge(perm[pairs[k].first], perm[pairs[k].second]))
      code |= (1u << k);
  return code;
}

// Exact isomorphism canonicalization by brute force: the minimum edge-set
// bitmask over all n! relabelings. Fine up to 7! = 5040 permutations.
std::uint32_t canonical_code(const Graph& g,
                             const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = perm_code(g, perm, pairs);
  while (std::next_permutation(perm.begin(), perm.end()))
    best = std::min(best, perm_code(g, perm, pairs));
  return best;
}

}  // namespace

MinSearchResult exhaustive_min_search(int n, const verify::Options&) {
  if (n < 4 || n > 7)
    throw PreconditionError("exhaustive search supports orders 4..7, got " +
                            std::to_string(n));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  const int np = static_cast<int>(pairs.size());

  MinSearchResult out;
  // 2-connected needs at least a cycle's worth of edges, so start at m = n.
  for (int m = n; m <= np; ++m) {
    std::vector<std::uint32_t> codes;
    std::vector<int> comb(static_cast<std::size_t>(m));
    std::iota(comb.begin(), comb.end(), 0);
    for (;;) {
      ++out.graphs_considered;
      Graph g(n);
      for (int idx : comb) g.add_edge(pairs[idx].first, pairs[idx].second);
      if (g.min_degree() >= 2 && g.is_two_connected() && is_mnt_graph(g))
        codes.push_back(canonical_code(g, pairs));
      // next m-combination in lexicographic order
      int i = m - 1;
      while (i >= 0 && comb[i] == np - m + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (!codes.empty()) {
      out.min_size = m;
      std::sort(codes.begin(), codes.end());
      codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
      for (std::uint32_t code : codes) {
        Graph g(n);
        for (int k = 0; k < np; ++k)
          if (code & (1u << k)) g.add_edge(pairs[k].first, pairs[k].second);
        out.extremal.push_back(std::move(g));
      }
      return out;
    }
  }
  return out;
}

}  // namespace mnt
