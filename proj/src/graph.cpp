#include "mntkit/graph.hpp"

#include <algorithm>

namespace mnt {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices)
    throw PreconditionError("graph order must be in [1, 128], got " +
                            std::to_string(n));
  rows_.assign(static_cast<std::size_t>(n), Bits128{});
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw PreconditionError("vertex " + std::to_string(v) +
                            " out of range for order " + std::to_string(n_));
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u].reset(v);
  rows_[v].reset(u);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return u != v && rows_[u].test(v);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = rows_[v].count();
  return d;
}

bool Graph::is_cubic() const {
  for (const auto& row : rows_)
    if (row.count() != 3) return false;
  return true;
}

int Graph::count_degree2() const {
  int m = 0;
  for (const auto& row : rows_)
    if (row.count() == 2) ++m;
  return m;
}

int Graph::min_degree() const {
  int d = kMaxVertices;
  for (const auto& row : rows_) d = std::min(d, row.count());
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (rows_[u].test(v)) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<int, int>> Graph::nonedges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!rows_[u].test(v)) out.emplace_back(u, v);
  return out;
}

namespace {

// BFS distance from src to dst inside `allowed`, with one edge masked out;
// -1 when unreachable.
int bfs_dist(const std::vector<Bits128>& rows, int n, int src, int dst,
             int skip_u, int skip_v) {
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  dist[static_cast<std::size_t>(src)] = 0;
  Bits128 frontier = Bits128::single(src);
  Bits128 seen = frontier;
  int d = 0;
  while (frontier.any()) {
    ++d;
    Bits128 next;
    frontier.for_each([&](int x) {
      Bits128 nb = rows[static_cast<std::size_t>(x)];
      if (x == skip_u) nb.reset(skip_v);
      if (x == skip_v) nb.reset(skip_u);
      next |= nb;
    });
    next = andnot(next, seen);
    if (next.test(dst)) return d;
    seen |= next;
    frontier = next;
  }
  return -1;
}

}  // namespace

std::optional<int> Graph::girth() const {
  int best = -1;
  for (int u = 0; u < n_; ++u) {
    Bits128 row = rows_[u];
    row.for_each([&](int v) {
      if (v <= u) return;
      int d = bfs_dist(rows_, n_, u, v, u, v);
      if (d >= 0 && (best < 0 || d + 1 < best)) best = d + 1;
    });
  }
  if (best < 0) return std::nullopt;
  return best;
}

bool Graph::is_connected() const {
  Bits128 reach = Bits128::single(0);
  Bits128 frontier = reach;
  while (frontier.any()) {
    Bits128 next;
    frontier.for_each([&](int x) { next |= rows_[static_cast<std::size_t>(x)]; });
    next = andnot(next, reach);
    reach |= next;
    frontier = next;
  }
  return reach == Bits128::low(n_);
}

bool Graph::is_two_connected() const {
  if (n_ < 3)
    throw PreconditionError("two-connectivity needs order >= 3, got " +
                            std::to_string(n_));
  if (!is_connected()) return false;
  // Iterative lowpoint DFS from 0; any articulation vertex disqualifies.
  std::vector<int> disc(static_cast<std::size_t>(n_), -1);
  std::vector<int> low(static_cast<std::size_t>(n_), 0);
  std::vector<int> parent(static_cast<std::size_t>(n_), -1);
  std::vector<int> stack;
  std::vector<Bits128> todo(static_cast<std::size_t>(n_));
  int timer = 0;
  int root_children = 0;

  disc[0] = low[0] = timer++;
  todo[0] = rows_[0];
  stack.push_back(0);
  while (!stack.empty()) {
    int v = stack.back();
    int w = todo[static_cast<std::size_t>(v)].first();
    if (w < 0) {
      stack.pop_back();
      int p = parent[static_cast<std::size_t>(v)];
      if (p >= 0) {
        low[static_cast<std::size_t>(p)] =
            std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
        if (p != 0 && low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)])
          return false;
      }
      continue;
    }
    todo[static_cast<std::size_t>(v)].reset(w);
    if (disc[static_cast<std::size_t>(w)] < 0) {
      parent[static_cast<std::size_t>(w)] = v;
      if (v == 0) ++root_children;
      disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
      todo[static_cast<std::size_t>(w)] = rows_[static_cast<std::size_t>(w)];
      todo[static_cast<std::size_t>(w)].reset(v);
      stack.push_back(w);
    } else {
      low[static_cast<std::size_t>(v)] =
          std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
    }
  }
  return root_children <= 1;
}

Relabeled Graph::induced_subgraph(const std::vector<int>& vertices) const {
  std::vector<int> keep = vertices;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw PreconditionError("induced subgraph needs a nonempty vertex set");
  for (int v : keep) check_vertex(v);

  std::vector<int> old_to_new(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i)
    old_to_new[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);

  Graph g(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (rows_[static_cast<std::size_t>(keep[i])].test(keep[j]))
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return {std::move(g), std::move(old_to_new)};
}

Relabeled Graph::delete_vertex(int v) const {
  check_vertex(v);
  if (n_ == 1) throw PreconditionError("cannot delete the only vertex");
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(n_) - 1);
  for (int u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(keep);
}

}  // namespace mnt
