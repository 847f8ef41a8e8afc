#include "mntkit/ham.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace mnt::ham {

namespace {

constexpr std::uint64_t kUnlimited = ~0ull;
constexpr std::uint64_t kLargeOrderCap = 1'000'000'000ull;

std::uint64_t effective_budget(const Graph& g, const Query& q) {
  if (q.node_budget) return *q.node_budget;
  return g.vertex_count() <= 40 ? kUnlimited : kLargeOrderCap;
}

void validate_query(const Graph& g, const Query& q) {
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

// The path/cycle search runs on a cycle instance: path queries get a
// virtual closing vertex appended (adjacent everywhere for free endpoints,
// or only to the pinned ends), so one search core serves both kinds.
struct Instance {
  int n = 0;
  int anchor = 0;
  int virt = -1;  // virtual vertex id, or -1 for genuine cycle queries
  std::vector<Bits128> adj;
  std::vector<Bits128> req;
};

enum class PrepState { search, found_trivially, infeasible };

// Restrict adjacency around required edges: a vertex with two required
// edges rides exactly those two in any Hamiltonian cycle, so its other
// edges can never be used. Detects impossible configurations up front.
PrepState preprocess(Instance& inst, std::vector<int>& trivial_cycle) {
  const int n = inst.n;
  for (int v = 0; v < n; ++v) {
    const int c = inst.req[v].count();
    if (c > 2) return PrepState::infeasible;
    if (c == 2) {
      Bits128 drop = andnot(inst.adj[v], inst.req[v]);
      drop.for_each([&](int w) { inst.adj[w].reset(v); });
      inst.adj[v] = inst.req[v];
    }
  }
  for (int v = 0; v < n; ++v)
    if (inst.adj[v].count() < 2) return PrepState::infeasible;

  // Required edges must form disjoint paths — or one full cycle, in which
  // case they already answer the query.
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[static_cast<std::size_t>(x)] != x) {
      comp[static_cast<std::size_t>(x)] =
          comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
      x = comp[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int req_edges = 0;
  bool closed = false;
  for (int u = 0; u < n; ++u) {
    Bits128 row = inst.req[u];
    row.for_each([&](int v) {
      if (v <= u) return;
      ++req_edges;
      int a = find(u), b = find(v);
      if (a == b)
        closed = true;
      else
        comp[static_cast<std::size_t>(a)] = b;
    });
  }
  if (closed) {
    if (req_edges != n) return PrepState::infeasible;
    // One n-cycle of required edges: walk it out as the witness.
    trivial_cycle.clear();
    int prev = -1, cur = 0;
    for (int k = 0; k < n; ++k) {
      trivial_cycle.push_back(cur);
      Bits128 next = inst.req[cur];
      if (prev >= 0) next.reset(prev);
      prev = cur;
      cur = next.first();
    }
    return PrepState::found_trivially;
  }
  return PrepState::search;
}

struct Searcher {
  const Instance& inst;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  bool found = false;

  Bits128 visited;
  std::vector<int> seq;

  // Scratch for the block-cut scan, reused across nodes.
  std::vector<int> disc, low, parent, estack_u, estack_v;
  std::vector<Bits128> todo, block_members;
  std::vector<char> is_cut;

  explicit Searcher(const Instance& i, std::uint64_t b)
      : inst(i),
        budget(b),
        disc(static_cast<std::size_t>(i.n)),
        low(static_cast<std::size_t>(i.n)),
        parent(static_cast<std::size_t>(i.n)),
        todo(static_cast<std::size_t>(i.n)),
        block_members(static_cast<std::size_t>(i.n)),
        is_cut(static_cast<std::size_t>(i.n), 0) {
    seq.reserve(static_cast<std::size_t>(i.n));
  }

  bool run() {
    const int a = inst.anchor;
    visited.set(a);
    seq.push_back(a);
    Bits128 cand = inst.req[a].count() == 2 ? inst.req[a] : inst.adj[a];
    return branch(a, -1, cand);
  }

  // Candidate ordering: fewest onward moves first, vertex id as tiebreak.
  bool branch(int u, int pred, Bits128 cand) {
    (void)pred;
    const Bits128 S = andnot(Bits128::low(inst.n), visited);
    std::array<std::pair<int, int>, Graph::kMaxVertices> order;
    int cnt = 0;
    cand.for_each([&](int x) {
      order[static_cast<std::size_t>(cnt++)] = {(inst.adj[x] & S).count(), x};
    });
    std::sort(order.begin(), order.begin() + cnt);
    for (int k = 0; k < cnt; ++k) {
      const int x = order[static_cast<std::size_t>(k)].second;
      visited.set(x);
      seq.push_back(x);
      if (dfs(x, u)) return true;
      seq.pop_back();
      visited.reset(x);
      if (out_of_budget) return false;
    }
    return false;
  }

  bool dfs(int u, int pred) {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    const Bits128 S = andnot(Bits128::low(inst.n), visited);

    Bits128 pending = inst.req[u];
    if (pred >= 0) pending.reset(pred);

    if (S.none()) {
      if (!inst.adj[u].test(inst.anchor)) return false;
      if (!pending.subset_of(Bits128::single(inst.anchor))) return false;
      Bits128 ends;
      ends.set(seq[1]);
      ends.set(u);
      if (!inst.req[inst.anchor].subset_of(ends)) return false;
      found = true;
      return true;
    }

    if (pending.any()) {
      // The unused required edge at u dictates the next step.
      if (pending.count() >= 2) return false;
      const int x = pending.first();
      if (x == inst.anchor || visited.test(x)) return false;
      visited.set(x);
      seq.push_back(x);
      if (dfs(x, u)) return true;
      seq.pop_back();
      visited.reset(x);
      return false;
    }

    Bits128 cand = inst.adj[u] & S;
    if (cand.none()) return false;

    int forced = -1;
    if (!feasible(u, S, forced)) return false;
    if (forced >= 0) cand = Bits128::single(forced);
    return branch(u, pred, cand);
  }

  // Necessary conditions for completing the cycle from endpoint u across
  // the unvisited set S, closing at the anchor:
  //  - degree/slot analysis: a vertex with no spare connections inside S
  //    must sit right after u or right before the anchor, and there are
  //    only those two slots;
  //  - the rest of the route lives inside S, so S must be connected and
  //    touch the anchor;
  //  - every leaf block of S must be able to host one of the two route
  //    endpoints.
  // Sets `forced` when the slot analysis pins down the next vertex.
  bool feasible(int u, const Bits128& S, int& forced) {
    const int scount = S.count();
    if (!(inst.adj[inst.anchor] & S).any()) return false;

    int need_next = 0, need_last = 0, flexible = 0;
    bool ok = true;
    S.for_each([&](int x) {
      if (!ok) return;
      const int inside = (inst.adj[x] & S).count();
      if (inside >= 2) return;
      const bool at_u = inst.adj[x].test(u);
      const bool at_anchor = inst.adj[x].test(inst.anchor);
      if (inside == 0) {
        if (!at_u || !at_anchor || scount != 1) {
          ok = false;
          return;
        }
        forced = x;
      } else if (at_u && at_anchor) {
        ++flexible;
      } else if (at_u) {
        ++need_next;
        forced = x;
      } else if (at_anchor) {
        ++need_last;
      } else {
        ok = false;
      }
    });
    if (!ok || need_next > 1 || need_last > 1 ||
        need_next + need_last + flexible > 2)
      return false;
    if (need_next != 1 && scount != 1) forced = -1;

    if (scount > 1 && !connected_within(S)) return false;
    if (scount >= 5 && !leaf_blocks_ok(u, S)) return false;
    return true;
  }

  bool connected_within(const Bits128& S) {
    Bits128 reach = Bits128::single(S.first());
    Bits128 frontier = reach;
    while (frontier.any()) {
      Bits128 next;
      frontier.for_each([&](int x) { next |= inst.adj[x]; });
      next &= S;
      next = andnot(next, reach);
      reach |= next;
      frontier = next;
    }
    return reach == S;
  }

  // Block decomposition of the subgraph induced by S. The remaining route
  // is a Hamiltonian path of that subgraph from a neighbour of u to a
  // neighbour of the anchor, so at most two leaf blocks of its block-cut
  // tree may exist and their interiors must be able to host the two route
  // ends. Classification is deferred until the scan finishes because a
  // block's leaf status depends on cut vertices discovered after it pops.
  bool leaf_blocks_ok(int u, const Bits128& S) {
    const Bits128 from_u = inst.adj[u] & S;
    const Bits128 from_anchor = inst.adj[inst.anchor] & S;

    int timer = 0;
    const int root = S.first();
    S.for_each([&](int v) {
      disc[static_cast<std::size_t>(v)] = -1;
      is_cut[static_cast<std::size_t>(v)] = 0;
    });
    disc[static_cast<std::size_t>(root)] = timer++;
    low[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    todo[static_cast<std::size_t>(root)] = inst.adj[root] & S;

    estack_u.clear();
    estack_v.clear();
    std::array<int, Graph::kMaxVertices> stack;
    int top = 0;
    stack[top++] = root;

    int blocks = 0;
    int root_pops = 0;

    while (top > 0) {
      const int v = stack[top - 1];
      const int w = todo[static_cast<std::size_t>(v)].first();
      if (w < 0) {
        --top;
        const int p = parent[static_cast<std::size_t>(v)];
        if (p < 0) continue;
        low[static_cast<std::size_t>(p)] = std::min(
            low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
        if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) {
          // Pop one block's edges down to the tree edge (p, v).
          Bits128 members;
          for (;;) {
            const int eu = estack_u.back();
            const int ev = estack_v.back();
            estack_u.pop_back();
            estack_v.pop_back();
            members.set(eu);
            members.set(ev);
            if (eu == p && ev == v) break;
          }
          block_members[static_cast<std::size_t>(blocks++)] = members;
          if (p == root)
            ++root_pops;
          else
            is_cut[static_cast<std::size_t>(p)] = 1;
        }
        continue;
      }
      todo[static_cast<std::size_t>(v)].reset(w);
      if (disc[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = v;
        disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] =
            timer++;
        todo[static_cast<std::size_t>(w)] = inst.adj[w] & S;
        todo[static_cast<std::size_t>(w)].reset(v);
        estack_u.push_back(v);
        estack_v.push_back(w);
        stack[top++] = w;
      } else if (disc[static_cast<std::size_t>(w)] <
                 disc[static_cast<std::size_t>(v)]) {
        estack_u.push_back(v);
        estack_v.push_back(w);
        low[static_cast<std::size_t>(v)] = std::min(
            low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
      }
    }
    if (blocks <= 1) return true;
    if (root_pops >= 2) is_cut[static_cast<std::size_t>(root)] = 1;

    int leaves = 0;
    Bits128 interior_a, interior_b;
    for (int b = 0; b < blocks; ++b) {
      const Bits128& members = block_members[static_cast<std::size_t>(b)];
      Bits128 interior = members;
      int cuts = 0;
      members.for_each([&](int x) {
        if (is_cut[static_cast<std::size_t>(x)]) {
          ++cuts;
          interior.reset(x);
        }
      });
      if (cuts > 1) continue;
      if (leaves == 0)
        interior_a = interior;
      else if (leaves == 1)
        interior_b = interior;
      if (++leaves > 2) return false;
    }
    if (leaves < 2) return true;
    const bool a_next = interior_a.intersects(from_u);
    const bool a_last = interior_a.intersects(from_anchor);
    const bool b_next = interior_b.intersects(from_u);
    const bool b_last = interior_b.intersects(from_anchor);
    return (a_next && b_last) || (a_last && b_next);
  }
};

}  // namespace

Result solve(const Graph& g, const Query& q) {
  validate_query(g, q);
  const int n = g.vertex_count();
  Result res;
  res.attestation.completed = true;

  if (q.kind == Kind::path && n == 1) {
    res.verdict = Verdict::found;
    res.witness = {0};
    return res;
  }
  if (q.kind == Kind::cycle && n < 3) {
    res.verdict = Verdict::none;
    return res;
  }

  Instance inst;
  const bool is_path = q.kind == Kind::path;
  inst.n = is_path ? n + 1 : n;
  if (inst.n > Graph::kMaxVertices)
    throw QueryError("path search needs a closing vertex; order 128 graphs "
                     "exceed the 128-vertex adjacency rows");
  inst.adj.assign(static_cast<std::size_t>(inst.n), Bits128{});
  inst.req.assign(static_cast<std::size_t>(inst.n), Bits128{});
  for (int v = 0; v < n; ++v) inst.adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  for (auto [u, v] : q.required_edges) {
    inst.req[static_cast<std::size_t>(u)].set(v);
    inst.req[static_cast<std::size_t>(v)].set(u);
  }

  if (is_path) {
    const int w = n;
    inst.virt = w;
    inst.anchor = w;
    if (q.start && q.end) {
      inst.adj[static_cast<std::size_t>(w)].set(*q.start);
      inst.adj[static_cast<std::size_t>(w)].set(*q.end);
      inst.adj[static_cast<std::size_t>(*q.start)].set(w);
      inst.adj[static_cast<std::size_t>(*q.end)].set(w);
    } else {
      for (int v = 0; v < n; ++v) {
        inst.adj[static_cast<std::size_t>(w)].set(v);
        inst.adj[static_cast<std::size_t>(v)].set(w);
      }
      if (q.start) {
        inst.req[static_cast<std::size_t>(w)].set(*q.start);
        inst.req[static_cast<std::size_t>(*q.start)].set(w);
      }
    }
  } else {
    // Anchor a required edge when present (maximises forcing), otherwise
    // honour the hint, otherwise the lowest-id minimum-degree vertex.
    int anchor = -1;
    for (int v = 0; v < n && anchor < 0; ++v)
      if (inst.req[static_cast<std::size_t>(v)].count() == 2) anchor = v;
    for (int v = 0; v < n && anchor < 0; ++v)
      if (inst.req[static_cast<std::size_t>(v)].count() == 1) anchor = v;
    if (anchor < 0 && q.start) anchor = *q.start;
    if (anchor < 0) {
      int best = Graph::kMaxVertices + 1;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) < best) {
          best = g.degree(v);
          anchor = v;
        }
    }
    inst.anchor = anchor;
  }

  std::vector<int> trivial;
  switch (preprocess(inst, trivial)) {
    case PrepState::infeasible:
      res.verdict = Verdict::none;
      return res;
    case PrepState::found_trivially:
      res.verdict = Verdict::found;
      res.witness = std::move(trivial);
      break;
    case PrepState::search: {
      Searcher s(inst, effective_budget(g, q));
      const bool ok = s.run();
      res.attestation.nodes_expanded = s.nodes;
      if (ok) {
        res.verdict = Verdict::found;
        res.witness = s.seq;
      } else if (s.out_of_budget) {
        res.verdict = Verdict::budget_exhausted;
        res.attestation.completed = false;
        return res;
      } else {
        res.verdict = Verdict::none;
        return res;
      }
      break;
    }
  }

  // Map the cycle found in the instance back to the query's shape.
  std::vector<int>& w = res.witness;
  if (inst.virt >= 0) {
    auto it = std::find(w.begin(), w.end(), inst.virt);
    std::rotate(w.begin(), it, w.end());
    w.erase(w.begin());
    const bool flip_free = !q.start && !q.end && w.front() > w.back();
    const bool flip_pinned = q.start && w.front() != *q.start;
    if (flip_free || flip_pinned) std::reverse(w.begin(), w.end());
  } else {
    auto it = std::min_element(w.begin(), w.end());
    std::rotate(w.begin(), it, w.end());
    if (w.size() >= 3 && w[1] > w.back())
      std::reverse(w.begin() + 1, w.end());
  }
  return res;
}

bool validate_witness(const Graph& g, const Query& q,
                      const std::vector<int>& seq) {
  const int n = g.vertex_count();
  if (static_cast<int>(seq.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : seq) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.has_edge(seq[i], seq[i + 1])) return false;

  if (q.kind == Kind::cycle) {
    if (n < 3) return false;
    if (!g.has_edge(seq.back(), seq.front())) return false;
  } else {
    if (n > 1) {
      const int f = seq.front(), b = seq.back();
      if (q.start && q.end) {
        if (!((f == *q.start && b == *q.end) || (f == *q.end && b == *q.start)))
          return false;
      } else if (q.start && f != *q.start && b != *q.start) {
        return false;
      } else if (q.end && f != *q.end && b != *q.end) {
        return false;
      }
    } else if (q.start && seq.front() != *q.start) {
      return false;
    }
  }

  if (!q.required_edges.empty()) {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < seq.size(); ++i)
      pos[static_cast<std::size_t>(seq[i])] = static_cast<int>(i);
    for (auto [u, v] : q.required_edges) {
      if (u < 0 || u >= n || v < 0 || v >= n) return false;
      int d = std::abs(pos[static_cast<std::size_t>(u)] -
                       pos[static_cast<std::size_t>(v)]);
      const bool adjacent_in_seq =
          d == 1 || (q.kind == Kind::cycle && d == n - 1);
      if (!adjacent_in_seq) return false;
    }
  }
  return true;
}

}  // namespace mnt::ham
