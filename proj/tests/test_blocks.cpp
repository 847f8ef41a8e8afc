#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mntkit/blocks.hpp"
#include "mntkit/graph6.hpp"

using namespace mnt;
using blocks::BlockSpec;

TEST_SUITE("blocks") {

TEST_CASE("petersen: order 10, cubic, girth 5, exits are N(z)") {
  BlockSpec p = blocks::petersen();
  CHECK(p.graph.vertex_count() == 10);
  CHECK(p.graph.edge_count() == 15);
  CHECK(p.graph.is_cubic());
  CHECK(p.graph.girth() == 5);
  for (int e : p.exits) CHECK(p.graph.has_edge(p.opened_at, e));
  CHECK_NOTHROW(blocks::validate_block(p));
}

TEST_CASE("coxeter: order 28, cubic, girth 7") {
  BlockSpec c = blocks::coxeter();
  CHECK(c.graph.vertex_count() == 28);
  CHECK(c.graph.edge_count() == 42);
  CHECK(c.graph.is_cubic());
  CHECK(c.graph.girth() == 7);
  CHECK(c.graph.is_two_connected());
  CHECK_NOTHROW(blocks::validate_block(c));
}

TEST_CASE("flower snarks: order 4k, cubic, only odd k >= 5") {
  for (int k : {5, 7, 9}) {
    BlockSpec j = blocks::flower_snark(k);
    CHECK(j.graph.vertex_count() == 4 * k);
    CHECK(j.graph.is_cubic());
    // k = 5 keeps a pentagon; the girth settles at 6 from k = 7 on
    CHECK(j.graph.girth() == (k == 5 ? 5 : 6));
    CHECK_NOTHROW(blocks::validate_block(j));
  }
  CHECK_THROWS_AS(blocks::flower_snark(3), PreconditionError);
  CHECK_THROWS_AS(blocks::flower_snark(4), PreconditionError);
  CHECK_THROWS_AS(blocks::flower_snark(6), PreconditionError);
}

TEST_CASE("block file round trip, header after or before the graph") {
  BlockSpec p = blocks::petersen();
  std::ostringstream out;
  blocks::write_block_file(out, p);
  std::istringstream in(out.str());
  BlockSpec back = blocks::load_block_file(in, "pet");
  CHECK(back.graph == p.graph);
  CHECK(back.opened_at == p.opened_at);
  CHECK(back.exits == p.exits);

  // header first, comments sprinkled in
  std::istringstream in2("# a comment\nz=0 a=1 b=4 c=5\n\n" +
                         to_graph6(p.graph) + "\n");
  BlockSpec swapped = blocks::load_block_file(in2, "pet2");
  CHECK(swapped.graph == p.graph);
  CHECK(swapped.exits == p.exits);
}

TEST_CASE("block files reject broken headers and labels") {
  std::string g6 = to_graph6(blocks::petersen().graph);
  auto load = [&](const std::string& text) {
    std::istringstream in(text);
    return blocks::load_block_file(in, "t");
  };
  CHECK_THROWS(load(g6 + "\n"));                       // no header
  CHECK_THROWS(load(g6 + "\nz=0 a=1 b=4\n"));          // c missing
  CHECK_THROWS(load(g6 + "\nz=0 a=2 b=4 c=5\n"));      // a not adjacent to z
  CHECK_THROWS(load(g6 + "\nz=0 a=1 b=1 c=5\n"));      // duplicate exit
  CHECK_THROWS(load(g6 + "\nz=0 a=1 b=4 c=99\n"));     // out of range
  CHECK_THROWS(load("z=0 a=1 b=4 c=5\n"));             // no graph at all
}

TEST_CASE("external order-22 block: order is enforced, content is not") {
  // wrong order rejected outright
  {
    std::ofstream f("/tmp/not22.block");
    f << to_graph6(blocks::petersen().graph) << "\nz=0 a=1 b=4 c=5\n";
  }
  CHECK_THROWS_AS(blocks::snark22("/tmp/not22.block"), PreconditionError);
  CHECK_THROWS(blocks::snark22("/tmp/definitely-missing.block"));

  // an order-22 cubic file loads; whether it is MHH is the verifier's call
  {
    Graph g(22);
    for (int i = 0; i < 22; ++i) g.add_edge(i, (i + 1) % 22);
    for (int i = 0; i < 11; ++i) g.add_edge(i, i + 11);
    std::ofstream f("/tmp/fake22.block");
    f << to_graph6(g) << "\nz=0 a=1 b=11 c=21\n";
  }
  BlockSpec s = blocks::snark22("/tmp/fake22.block");
  CHECK(s.graph.vertex_count() == 22);
}

TEST_CASE("validate_block wants a cubic graph opened at z") {
  Graph square(4);
  for (int i = 0; i < 4; ++i) square.add_edge(i, (i + 1) % 4);
  BlockSpec bad{"square", square, 0, {1, 2, 3}};
  CHECK_THROWS_AS(blocks::validate_block(bad), PreconditionError);
}

}  // TEST_SUITE
