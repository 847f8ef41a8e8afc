#include <atomic>
#include <string>
#include <vector>

#include "doctest.h"
#include "mntkit/dot.hpp"
#include "mntkit/graph.hpp"
#include "../src/parallel.hpp"

using namespace mnt;

TEST_SUITE("support") {

TEST_CASE("indexed runner covers a prefix exactly, any worker count") {
  const std::size_t count = 1000;
  const std::size_t poison = 137;
  for (int workers : {1, 2, 8}) {
    std::vector<std::atomic<int>> ran(count);
    std::size_t stop = run_indexed(count, workers, [&](std::size_t i) {
      ran[i].fetch_add(1);
      return i != poison;
    });
    CHECK(stop == poison);
    for (std::size_t i = 0; i < poison; ++i) {
      INFO("index ", i, " workers ", workers);
      CHECK(ran[i].load() == 1);  // everything below the stop ran, once
    }
  }
}

TEST_CASE("indexed runner without failures runs everything") {
  std::atomic<int> total{0};
  std::size_t stop = run_indexed(500, 4, [&](std::size_t) {
    total.fetch_add(1);
    return true;
  });
  CHECK(stop == 500);
  CHECK(total.load() == 500);
}

TEST_CASE("dot output is deterministic and styled") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  DotStyle style;
  style.graph_name = "triangle";
  style.comments = {"hand-made"};
  style.fillcolor[1] = "gold";
  style.note[1] = "hub";
  std::string dot = to_dot(g, style);
  CHECK(dot.find("graph triangle {") != std::string::npos);
  CHECK(dot.find("// hand-made") != std::string::npos);
  CHECK(dot.find("1 [label=\"1 hub\" style=filled fillcolor=\"gold\"]") !=
        std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("0 -- 2;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(to_dot(g, style) == dot);
}

}  // TEST_SUITE
