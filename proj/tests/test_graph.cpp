#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "mntkit/graph.hpp"
#include "mntkit/graph6.hpp"

using mnt::Graph;
using mnt::PreconditionError;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Connectivity the slow way, for cross-checking.
bool connected_brute(const Graph& g) {
  int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    g.neighbors(v).for_each([&](int w) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    });
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

TEST_SUITE("graph-core") {

TEST_CASE("edges are symmetric and irreflexive") {
  Graph g(4);
  g.add_edge(1, 3);
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(1, 1));
  CHECK_THROWS_AS(g.add_edge(2, 2), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(0, 4), PreconditionError);
  g.remove_edge(3, 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("edge count equals half the degree sum") {
  Graph g = mnt::from_graph6(mnt::to_graph6(complete(9)));
  int degsum = 0;
  for (int v = 0; v < 9; ++v) degsum += g.degree(v);
  CHECK(g.edge_count() * 2 == degsum);
  CHECK(g.edge_count() == 36);
}

TEST_CASE("nonedges complement edges exactly") {
  Graph g(7);
  g.add_edge(0, 1);
  g.add_edge(2, 5);
  g.add_edge(3, 6);
  auto non = g.nonedges();
  CHECK((int)non.size() == 21 - 3);
  std::set<std::pair<int, int>> set(non.begin(), non.end());
  CHECK_FALSE(set.count({0, 1}));
  CHECK_FALSE(set.count({2, 5}));
  CHECK(set.count({0, 2}));
  // sorted lexicographically, as the sweeps rely on
  CHECK(std::is_sorted(non.begin(), non.end()));
}

TEST_CASE("girth on standard shapes") {
  CHECK(complete(3).girth() == 3);
  CHECK(cycle(5).girth() == 5);
  CHECK(cycle(9).girth() == 9);
  CHECK_FALSE(path(6).girth().has_value());  // forest
  Graph g = cycle(8);
  g.add_edge(0, 3);  // chord creates a 4-cycle
  CHECK(g.girth() == 4);
}

TEST_CASE("connectivity agrees with a brute traversal") {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK(g.is_connected() == connected_brute(g));
  CHECK_FALSE(g.is_connected());
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  CHECK(g.is_connected() == connected_brute(g));
  CHECK(g.is_connected());
}

TEST_CASE("two-connectivity: cycles yes, paths and cut vertices no") {
  CHECK(cycle(3).is_two_connected());
  CHECK(cycle(12).is_two_connected());
  CHECK_FALSE(path(4).is_two_connected());
  // bowtie: two triangles sharing vertex 2
  Graph bow(5);
  bow.add_edge(0, 1);
  bow.add_edge(0, 2);
  bow.add_edge(1, 2);
  bow.add_edge(2, 3);
  bow.add_edge(2, 4);
  bow.add_edge(3, 4);
  CHECK_FALSE(bow.is_two_connected());
  CHECK_THROWS_AS(Graph(2).is_two_connected(), PreconditionError);
}

TEST_CASE("two-connectivity against a deletion brute force") {
  // every graph on 5 vertices with 5..7 edges, via graph6 round trip
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) pairs.emplace_back(u, v);
  for (int mask = 0; mask < (1 << 10); ++mask) {
    Graph g(5);
    for (int i = 0; i < 10; ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    bool brute = g.is_connected();
    for (int v = 0; v < 5 && brute; ++v) {
      auto cut = g.delete_vertex(v);
      if (!cut.graph.is_connected()) brute = false;
    }
    CHECK(g.is_two_connected() == brute);
  }
}

TEST_CASE("induced subgraph keeps edges and reports the relabeling") {
  Graph g = cycle(6);
  g.add_edge(0, 3);
  auto sub = g.induced_subgraph({0, 1, 2, 3});
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.graph.edge_count() == 4);  // path 0-1-2-3 plus chord 0-3
  // old_to_new maps dropped vertices to -1
  CHECK(sub.old_to_new[4] == -1);
  CHECK(sub.old_to_new[5] == -1);
  int a = sub.old_to_new[0], b = sub.old_to_new[3];
  CHECK(sub.graph.has_edge(a, b));
}

TEST_CASE("vertex deletion is the n-1 induced subgraph") {
  Graph g = complete(5);
  auto cut = g.delete_vertex(2);
  CHECK(cut.graph.vertex_count() == 4);
  CHECK(cut.graph.edge_count() == 6);
  CHECK(cut.old_to_new[2] == -1);
  for (int v : {0, 1, 3, 4}) CHECK(cut.old_to_new[v] != -1);
}

TEST_CASE("degree helpers") {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(3, 4);
  CHECK(g.min_degree() == 0);  // vertex 5 isolated
  CHECK(g.count_degree2() == 3);
  CHECK_FALSE(g.is_cubic());
  CHECK(complete(4).is_cubic());
  CHECK(g.degrees() == std::vector<int>{2, 2, 2, 1, 1, 0});
}

}  // TEST_SUITE
