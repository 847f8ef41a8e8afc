#include <sstream>
#include <string>

#include "doctest.h"
#include "mntkit/blocks.hpp"
#include "mntkit/certificate.hpp"
#include "mntkit/graph6.hpp"
#include "mntkit/inflate.hpp"
#include "mntkit/verify.hpp"

using namespace mnt;
using verify::Certificate;

namespace {

Graph ppp() {
  auto o = [] { return inflate::open_at(blocks::petersen()); };
  return inflate::k4_inflate(o(), o(), o()).graph;
}

Certificate roundtrip(const Certificate& c) {
  std::istringstream in(verify::to_jsonl(c));
  return verify::read_jsonl(in);
}

}  // namespace

TEST_SUITE("certificates") {

TEST_CASE("claims embed a stable hash of the graph") {
  Graph g = blocks::petersen().graph;
  std::string h = verify::graph_hash(g);
  CHECK(h.size() == 16);
  CHECK(verify::graph_hash(g) == h);  // pure
  CHECK(verify::make_claim("mnt", g) == "mnt:" + h);
  Graph g2 = g;
  g2.remove_edge(0, 1);
  CHECK(verify::graph_hash(g2) != h);
}

TEST_CASE("serialization is deterministic and order-stable") {
  Certificate c = verify::is_mhh(blocks::petersen().graph);
  std::string once = verify::to_jsonl(c);
  std::string twice = verify::to_jsonl(c);
  CHECK(once == twice);
  // attestations lead, witnesses follow
  std::istringstream in(once);
  std::string first;
  std::getline(in, first);
  CHECK(first.find("\"attestation\"") != std::string::npos);
}

TEST_CASE("round trip keeps every record") {
  Certificate c = verify::is_mhh(blocks::petersen().graph);
  Certificate back = roundtrip(c);
  CHECK(back.claim == c.claim);
  CHECK(back.witnesses.size() == c.witnesses.size());
  CHECK(back.attestations.size() == c.attestations.size());
  // the verdict is never serialized; replay re-derives it
  auto outcome = verify::replay(blocks::petersen().graph, back);
  CHECK(outcome.ok);
}

TEST_CASE("replay validates the full MNT certificate") {
  Graph g = ppp();
  verify::Options opt;
  opt.workers = 4;
  Certificate c = verify::is_mnt(g, opt);
  REQUIRE(c.certified());
  auto outcome = verify::replay(g, roundtrip(c));
  CHECK(outcome.ok);
  CHECK(outcome.message.find("337") != std::string::npos);
}

TEST_CASE("replay rejects every kind of tampering") {
  Graph g = blocks::petersen().graph;
  Certificate c = verify::is_mhh(g);
  REQUIRE(c.certified());

  SUBCASE("corrupted witness sequence") {
    Certificate bad = c;
    REQUIRE(!bad.witnesses.empty());
    bad.witnesses[0].seq[0] = bad.witnesses[0].seq[1];  // repeat a vertex
    auto outcome = verify::replay(g, bad);
    CHECK_FALSE(outcome.ok);
    CHECK(outcome.message.find(bad.witnesses[0].subclaim) !=
          std::string::npos);
  }

  SUBCASE("missing record") {
    Certificate bad = c;
    bad.witnesses.pop_back();
    auto outcome = verify::replay(g, bad);
    CHECK_FALSE(outcome.ok);
    CHECK(outcome.message.find("missing") != std::string::npos);
  }

  SUBCASE("duplicated record") {
    Certificate bad = c;
    bad.witnesses.push_back(bad.witnesses.front());
    CHECK_FALSE(verify::replay(g, bad).ok);
  }

  SUBCASE("foreign record") {
    Certificate bad = c;
    bad.witnesses.push_back({"nonedge=0-1", {0, 1, 2}});
    CHECK_FALSE(verify::replay(g, bad).ok);
  }

  SUBCASE("incomplete attestation") {
    Certificate bad = c;
    REQUIRE(!bad.attestations.empty());
    bad.attestations[0].completed = false;
    CHECK_FALSE(verify::replay(g, bad).ok);
  }

  SUBCASE("wrong graph entirely") {
    auto outcome = verify::replay(blocks::flower_snark(5).graph, c);
    CHECK_FALSE(outcome.ok);
    CHECK(outcome.message.find("hash") != std::string::npos);
  }
}

TEST_CASE("structural attestation values are recomputed at replay") {
  Graph g = ppp();
  verify::Options opt;
  opt.workers = 4;
  Certificate c = verify::certify_cubic_mnt(g, opt);
  REQUIRE(c.certified());
  CHECK(verify::replay(g, c).ok);
  Certificate bad = c;
  for (auto& a : bad.attestations)
    if (a.subclaim == verify::sub::girth) a.value = 17;
  CHECK_FALSE(verify::replay(g, bad).ok);
}

TEST_CASE("block-labeled claims replay and pin their labels") {
  blocks::BlockSpec p = blocks::petersen();
  Certificate c = verify::condition_C(p);
  REQUIRE(c.certified());
  CHECK(verify::replay(p.graph, roundtrip(c)).ok);

  // altering the z label changes the quantifier set: replay must balk
  Certificate bad = c;
  bad.claim = verify::make_block_claim("condC", p.graph, 2, 1, 3, 7);
  CHECK_FALSE(verify::replay(p.graph, bad).ok);
}

TEST_CASE("malformed certificate files fail with line numbers") {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return verify::read_jsonl(in);
  };
  CHECK_THROWS(read(""));
  CHECK_THROWS(read("not json\n"));
  CHECK_THROWS(read(R"({"claim":"mnt:0000000000000000"})" "\n"));  // no kind
  // claim mismatch across lines
  std::string two =
      R"({"claim":"mnt:0000000000000000","data":{"seq":[0,1]},"kind":"witness","subclaim":"a"})"
      "\n"
      R"({"claim":"mnt:1111111111111111","data":{"seq":[0,1]},"kind":"witness","subclaim":"b"})"
      "\n";
  CHECK_THROWS(read(two));
  // unknown record kind
  CHECK_THROWS(read(
      R"({"claim":"mnt:0000000000000000","data":{},"kind":"magic","subclaim":"a"})"
      "\n"));
  try {
    read("{}\n{broken\n");
    FAIL("expected a parse failure");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
}

TEST_CASE("claim strings parse strictly") {
  Graph g = blocks::petersen().graph;
  // wrong label order inside a block claim is rejected by replay
  Certificate c = verify::condition_C(blocks::petersen());
  Certificate bad = c;
  bad.claim = "condC:" + verify::graph_hash(g) + ":a=1:z=0:b=4:c=5";
  CHECK_FALSE(verify::replay(g, bad).ok);
  Certificate bad2 = c;
  bad2.claim = "condC:tooshort:z=0:a=1:b=4:c=5";
  CHECK_FALSE(verify::replay(g, bad2).ok);
}

TEST_CASE("unknown property names cannot be replayed") {
  Certificate c;
  c.claim = "sorcery:" + verify::graph_hash(blocks::petersen().graph);
  c.attestations.push_back({"nonhamiltonian", 3, true, std::nullopt});
  CHECK_FALSE(verify::replay(blocks::petersen().graph, c).ok);
}

}  // TEST_SUITE
