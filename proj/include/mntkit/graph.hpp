#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mntkit/bits.hpp"

namespace mnt {

// Thrown when an operation's stated precondition is violated
// (out-of-range vertex, too-small graph, bad argument shape).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Relabeled;

// Simple undirected graph on vertices 0..n-1, no loops or multi-edges.
// Adjacency is one Bits128 row per vertex, which caps the order at 128;
// everything this toolkit constructs stays well below that.
class Graph {
 public:
  static constexpr int kMaxVertices = 128;

  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;

  const Bits128& neighbors(int v) const {
    check_vertex(v);
    return rows_[v];
  }

  int degree(int v) const {
    check_vertex(v);
    return rows_[v].count();
  }
  std::vector<int> degrees() const;
  bool is_cubic() const;
  int count_degree2() const;
  int min_degree() const;

  // Edges as (u, v) with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;
  // Vertex pairs that are not edges, lexicographic.
  std::vector<std::pair<int, int>> nonedges() const;

  // Length of a shortest cycle; nullopt when the graph is acyclic.
  // Computed per edge: drop the edge, take the shortest path between
  // its ends, close it up again.
  std::optional<int> girth() const;

  bool is_connected() const;
  // Connected with no articulation vertex. Requires n >= 3.
  bool is_two_connected() const;

  // Subgraph induced by the (deduplicated, sorted) vertex set; new labels
  // follow the sorted order.
  Relabeled induced_subgraph(const std::vector<int>& vertices) const;
  // Drop one vertex; labels above it shift down by one.
  Relabeled delete_vertex(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<Bits128> rows_;
};

// Relabeled copy plus the old->new vertex map (-1 for dropped vertices).
struct Relabeled {
  Graph graph;
  std::vector<int> old_to_new;
};

}  // namespace mnt
