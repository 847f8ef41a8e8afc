#include <string>
#include <vector>

#include "doctest.h"
#include "mntkit/graph6.hpp"

using mnt::DecodeError;
using mnt::from_graph6;
using mnt::Graph;
using mnt::to_graph6;

TEST_SUITE("graph6") {

TEST_CASE("single vertex encodes as @") {
  Graph g(1);
  CHECK(to_graph6(g) == "@");
  CHECK(from_graph6("@").vertex_count() == 1);
  CHECK(from_graph6("@").edge_count() == 0);
}

TEST_CASE("D?{ is the 5-vertex star centered at vertex 4") {
  // Upper-triangle bits are column-major, so the last column (vertex 4)
  // occupies the tail of the bit stream.
  Graph g = from_graph6("D?{");
  REQUIRE(g.vertex_count() == 5);
  CHECK(g.edge_count() == 4);
  for (int v = 0; v < 4; ++v) {
    CHECK(g.has_edge(v, 4));
    CHECK(g.degree(v) == 1);
  }
  CHECK(g.degree(4) == 4);
  CHECK(to_graph6(g) == "D?{");
}

TEST_CASE("ten vertices, one edge in the final bit positions") {
  Graph g = from_graph6("I???????G");
  REQUIRE(g.vertex_count() == 10);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(8, 9));
  CHECK(to_graph6(g) == "I???????G");
}

TEST_CASE("dense round trips at several orders") {
  for (int n : {2, 3, 6, 7, 12, 31, 62, 63, 64, 100, 128}) {
    Graph g(n);
    // quadratic-residue-flavored edge pattern, irregular but deterministic
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((u * 7 + v * v) % 3 == 0) g.add_edge(u, v);
    std::string rec = to_graph6(g);
    Graph back = from_graph6(rec);
    CHECK(back == g);
    CHECK(to_graph6(back) == rec);
  }
}

TEST_CASE("orders 63 and up use the extended header") {
  Graph g(63);
  std::string rec = to_graph6(g);
  REQUIRE(rec.size() >= 4);
  CHECK(rec[0] == '~');     // extended-order marker
  CHECK(rec[1] != '~');     // but not the 8-byte form
  CHECK(from_graph6(rec).vertex_count() == 63);
}

TEST_CASE("malformed records name the offending byte") {
  CHECK_THROWS_AS(from_graph6(""), DecodeError);
  // byte 127 is out of the printable graph6 alphabet
  try {
    from_graph6("D?\x7f");
    FAIL("expected DecodeError");
  } catch (const DecodeError& e) {
    CHECK(e.offset == 2);
  }
  // truncated body: order 10 wants 8 body bytes
  CHECK_THROWS_AS(from_graph6("I??"), DecodeError);
  // nonzero padding bits beyond the triangle: order 2 uses only the top
  // bit of its single body byte, 'C' sets a lower one
  try {
    from_graph6("AC");
    FAIL("expected DecodeError");
  } catch (const DecodeError& e) {
    CHECK(e.offset == 1);
  }
  CHECK(from_graph6("A_").has_edge(0, 1));  // top bit alone is fine
  // trailing garbage after a complete record
  CHECK_THROWS_AS(from_graph6("D?{D?{"), DecodeError);
}

TEST_CASE("every pair position maps to the documented bit") {
  // one edge at a time through K7's slots; decoding must see exactly it
  int n = 7;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      Graph g(n);
      g.add_edge(u, v);
      Graph back = from_graph6(to_graph6(g));
      CHECK(back.edge_count() == 1);
      CHECK(back.has_edge(u, v));
    }
}

}  // TEST_SUITE
