#include "mntkit/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "mntkit/graph6.hpp"
#include "mntkit/ham.hpp"

namespace mnt::verify {

using nlohmann::json;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::certified:
      return "certified";
    case Verdict::refuted:
      return "refuted";
    case Verdict::incomplete:
      return "incomplete";
  }
  return "?";
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : to_graph6(g)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string make_claim(const std::string& prop, const Graph& g) {
  return prop + ":" + graph_hash(g);
}

std::string make_block_claim(const std::string& prop, const Graph& g, int z,
                             int a, int b, int c) {
  return make_claim(prop, g) + ":z=" + std::to_string(z) +
         ":a=" + std::to_string(a) + ":b=" + std::to_string(b) +
         ":c=" + std::to_string(c);
}

namespace sub {

std::string nonedge(int u, int v) {
  return "nonedge=" + std::to_string(u) + "-" + std::to_string(v);
}

std::string deleted(int v) { return "del=" + std::to_string(v); }

std::string cond_c(int u, bool with_anchor) {
  return "u=" + std::to_string(u) +
         (with_anchor ? ":with-anchor-edge" : ":without-anchor-edge");
}

std::string ext_c(int z, int u, int v) {
  return "z=" + std::to_string(z) + ":u=" + std::to_string(u) +
         ":v=" + std::to_string(v);
}

std::string hypo_end(int y) { return "end=" + std::to_string(y); }

std::string no_exit_pair(int p, int q) {
  return "no-exit-pair=" + std::to_string(p) + "-" + std::to_string(q);
}

std::string bridge(int y, int p, int q) {
  return "bridge=" + std::to_string(y) + ":" + std::to_string(p) + "-" +
         std::to_string(q);
}

std::string exit_path_prefix(int u, int v) {
  return "exit-path:nonedge=" + std::to_string(u) + "-" + std::to_string(v);
}

std::string exit_path(int u, int v, int p, int q) {
  return exit_path_prefix(u, v) + ":ends=" + std::to_string(p) + "-" +
         std::to_string(q);
}

}  // namespace sub

void write_jsonl(std::ostream& out, const Certificate& cert) {
  for (const auto& a : cert.attestations) {
    json data{{"nodes", a.nodes}, {"completed", a.completed}};
    if (a.value) data["value"] = *a.value;
    json line{{"claim", cert.claim},
              {"subclaim", a.subclaim},
              {"kind", "attestation"},
              {"data", data}};
    out << line.dump() << '\n';
  }
  for (const auto& w : cert.witnesses) {
    json line{{"claim", cert.claim},
              {"subclaim", w.subclaim},
              {"kind", "witness"},
              {"data", json{{"seq", w.seq}}}};
    out << line.dump() << '\n';
  }
}

std::string to_jsonl(const Certificate& cert) {
  std::ostringstream os;
  write_jsonl(os, cert);
  return os.str();
}

Certificate read_jsonl(std::istream& in) {
  Certificate cert;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) -> std::runtime_error {
    return std::runtime_error("certificate line " + std::to_string(lineno) +
                              ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw fail(std::string("not valid JSON (") + e.what() + ")");
    }
    if (!j.is_object() || !j.contains("claim") || !j.contains("subclaim") ||
        !j.contains("kind") || !j.contains("data")) {
      throw fail("record needs claim, subclaim, kind and data fields");
    }
    try {
      auto claim = j["claim"].get<std::string>();
      if (cert.claim.empty()) {
        cert.claim = claim;
      } else if (claim != cert.claim) {
        throw fail("claim differs from the first record's claim");
      }
      auto subclaim = j["subclaim"].get<std::string>();
      auto kind = j["kind"].get<std::string>();
      const json& data = j["data"];
      if (kind == "witness") {
        WitnessRecord w;
        w.subclaim = std::move(subclaim);
        w.seq = data.at("seq").get<std::vector<int>>();
        cert.witnesses.push_back(std::move(w));
      } else if (kind == "attestation") {
        AttestRecord a;
        a.subclaim = std::move(subclaim);
        a.nodes = data.at("nodes").get<std::uint64_t>();
        a.completed = data.at("completed").get<bool>();
        if (data.contains("value")) a.value = data["value"].get<std::int64_t>();
        cert.attestations.push_back(std::move(a));
      } else {
        throw fail("kind must be witness or attestation");
      }
    } catch (const json::exception& e) {
      throw fail(std::string("malformed record data (") + e.what() + ")");
    }
  }
  if (cert.claim.empty()) throw std::runtime_error("certificate file is empty");
  return cert;
}

namespace {

// ---- claim parsing -------------------------------------------------------

struct ClaimParts {
  std::string prop;
  std::string hash;
  bool has_labels = false;
  int z = -1, a = -1, b = -1, c = -1;
};

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

std::optional<ClaimParts> parse_claim(const std::string& claim) {
  std::vector<std::string> tok;
  std::size_t pos = 0;
  while (pos <= claim.size()) {
    std::size_t next = claim.find(':', pos);
    if (next == std::string::npos) next = claim.size();
    tok.push_back(claim.substr(pos, next - pos));
    pos = next + 1;
  }
  if (tok.size() != 2 && tok.size() != 6) return std::nullopt;
  ClaimParts cp;
  cp.prop = tok[0];
  cp.hash = tok[1];
  if (cp.prop.empty() || cp.hash.size() != 16) return std::nullopt;
  if (tok.size() == 6) {
    cp.has_labels = true;
    const char* keys[4] = {"z=", "a=", "b=", "c="};
    int* slots[4] = {&cp.z, &cp.a, &cp.b, &cp.c};
    for (int i = 0; i < 4; ++i) {
      const std::string& t = tok[2 + i];
      if (t.rfind(keys[i], 0) != 0) return std::nullopt;
      if (!parse_int(t.substr(2), *slots[i])) return std::nullopt;
    }
  }
  return cp;
}

// ---- coverage ------------------------------------------------------------

// How to rebuild the graph and query a witness record must satisfy. Labels
// are in the claimed graph's coordinates; `drop` vertices are removed
// first, then `add`/`erase_edges` are applied to the relabeled copy.
struct BuildSpec {
  std::vector<int> drop;
  std::vector<std::pair<int, int>> add;
  std::vector<std::pair<int, int>> erase_edges;
  ham::Kind kind = ham::Kind::cycle;
  std::optional<int> start;
  std::optional<int> end;
  std::vector<std::pair<int, int>> required;
  bool ends_from_subclaim = false;  // Lemma-8 records carry ":ends=p-q"
};

struct Entry {
  std::string key;  // full subclaim; for Lemma-8 records, the prefix
  bool is_witness = true;
  BuildSpec spec;
  std::optional<std::int64_t> value;  // structural attestations
  bool seen = false;
};

struct Coverage {
  std::vector<Entry> entries;
  std::map<std::string, std::size_t> index;

  void add(Entry e) {
    index.emplace(e.key, entries.size());
    entries.push_back(std::move(e));
  }
  void attest(const std::string& key,
              std::optional<std::int64_t> value = std::nullopt) {
    Entry e;
    e.key = key;
    e.is_witness = false;
    e.value = value;
    add(std::move(e));
  }
  void witness(const std::string& key, BuildSpec spec) {
    Entry e;
    e.key = key;
    e.spec = std::move(spec);
    add(std::move(e));
  }
};

void cover_nonedges(const Graph& g, ham::Kind kind, Coverage& cov) {
  for (auto [u, v] : g.nonedges()) {
    BuildSpec s;
    s.add = {{u, v}};
    s.kind = kind;
    cov.witness(sub::nonedge(u, v), std::move(s));
  }
}

void cover_deletions(const Graph& g, Coverage& cov) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    BuildSpec s;
    s.drop = {v};
    s.kind = ham::Kind::cycle;
    cov.witness(sub::deleted(v), std::move(s));
  }
}

// The three exit labels must be exactly the neighbourhood of z.
std::string check_block_labels(const Graph& g, const ClaimParts& cp) {
  int n = g.vertex_count();
  if (cp.z < 0 || cp.z >= n) return "claim label z is out of range";
  Bits128 exits{};
  for (int x : {cp.a, cp.b, cp.c}) {
    if (x < 0 || x >= n) return "claim exit label out of range";
    exits.set(x);
  }
  if (exits.count() != 3 || !(exits == g.neighbors(cp.z)))
    return "claim exit labels are not the neighbourhood of z";
  return {};
}

std::string build_coverage(const Graph& g, const ClaimParts& cp,
                           Coverage& cov) {
  const int n = g.vertex_count();
  const std::string& p = cp.prop;
  bool needs_labels = (p == "condC" || p == "hypopaths");
  if (needs_labels != cp.has_labels)
    return "claim has the wrong shape for property " + p;

  if (p == "mnt") {
    cov.attest(sub::nontraceable);
    cover_nonedges(g, ham::Kind::path, cov);
  } else if (p == "mnh") {
    cov.attest(sub::nonhamiltonian);
    cover_nonedges(g, ham::Kind::cycle, cov);
  } else if (p == "hypo") {
    cov.attest(sub::nonhamiltonian);
    cover_deletions(g, cov);
  } else if (p == "mhh") {
    cov.attest(sub::nonhamiltonian);
    cover_nonedges(g, ham::Kind::cycle, cov);
    cover_deletions(g, cov);
  } else if (p == "cubicmnt") {
    cov.attest(sub::cubic, g.is_cubic() ? 1 : 0);
    cov.attest(sub::two_connected, n >= 3 && g.is_two_connected() ? 1 : 0);
    cov.attest(sub::order, n);
    cov.attest(sub::size, g.edge_count());
    cov.attest(sub::girth, g.girth().value_or(-1));
    cov.attest(sub::nontraceable);
    cover_nonedges(g, ham::Kind::path, cov);
  } else if (p == "condC") {
    if (auto err = check_block_labels(g, cp); !err.empty()) return err;
    for (int u = 0; u < n; ++u) {
      if (u == cp.z || g.neighbors(cp.z).test(u)) continue;
      BuildSpec with;
      with.add = {{cp.z, u}};
      with.required = {{cp.z, cp.a}, {cp.z, u}};
      cov.witness(sub::cond_c(u, true), std::move(with));
      BuildSpec without;
      without.add = {{cp.z, u}};
      without.erase_edges = {{cp.z, cp.a}};
      without.required = {{cp.z, u}};
      cov.witness(sub::cond_c(u, false), std::move(without));
    }
  } else if (p == "extC") {
    for (int z = 0; z < n; ++z) {
      g.neighbors(z).for_each([&](int u) {
        for (int v = 0; v < n; ++v) {
          if (v == z || g.neighbors(z).test(v) || g.neighbors(u).test(v))
            continue;
          BuildSpec s;
          s.add = {{u, v}};
          s.required = {{u, z}};
          cov.witness(sub::ext_c(z, u, v), std::move(s));
        }
      });
    }
  } else if (p == "hypopaths") {
    if (auto err = check_block_labels(g, cp); !err.empty()) return err;
    for (int y = 0; y < n; ++y) {
      if (y == cp.z) continue;
      BuildSpec s;
      s.drop = {cp.z};
      s.kind = ham::Kind::path;
      s.start = y;
      cov.witness(sub::hypo_end(y), std::move(s));
    }
    int ex[3] = {cp.a, cp.b, cp.c};
    std::sort(ex, ex + 3);
    cov.attest(sub::no_exit_pair(ex[0], ex[1]));
    cov.attest(sub::no_exit_pair(ex[0], ex[2]));
    cov.attest(sub::no_exit_pair(ex[1], ex[2]));
    for (int i = 0; i < 3; ++i) {
      int p1 = ex[(i + 1) % 3], p2 = ex[(i + 2) % 3];
      if (p1 > p2) std::swap(p1, p2);
      BuildSpec s;
      s.drop = {cp.z, ex[i]};
      s.kind = ham::Kind::path;
      s.start = p1;
      s.end = p2;
      cov.witness(sub::bridge(ex[i], p1, p2), std::move(s));
    }
    for (int u = 0; u < n; ++u) {
      if (u == cp.z) continue;
      for (int v = u + 1; v < n; ++v) {
        if (v == cp.z || g.neighbors(u).test(v)) continue;
        BuildSpec s;
        s.drop = {cp.z};
        s.add = {{u, v}};
        s.kind = ham::Kind::path;
        s.ends_from_subclaim = true;
        cov.witness(sub::exit_path_prefix(u, v), std::move(s));
      }
    }
  } else {
    return "unknown claim property: " + p;
  }
  return {};
}

// ---- witness checking ----------------------------------------------------

std::string check_witness(const Graph& g, const BuildSpec& spec,
                          const std::vector<int>& seq_orig) {
  const int n = g.vertex_count();
  Bits128 dropped{};
  for (int d : spec.drop) dropped.set(d);
  std::vector<int> keep;
  keep.reserve(n);
  for (int v = 0; v < n; ++v)
    if (!dropped.test(v)) keep.push_back(v);
  auto rel = g.induced_subgraph(keep);
  Graph h = rel.graph;
  auto mapv = [&](int x) {
    return (x >= 0 && x < n) ? rel.old_to_new[x] : -1;
  };
  for (auto [u, v] : spec.add) h.add_edge(mapv(u), mapv(v));
  for (auto [u, v] : spec.erase_edges) h.remove_edge(mapv(u), mapv(v));

  ham::Query q;
  q.kind = spec.kind;
  if (spec.start) q.start = mapv(*spec.start);
  if (spec.end) q.end = mapv(*spec.end);
  for (auto [u, v] : spec.required) q.required_edges.push_back({mapv(u), mapv(v)});

  std::vector<int> seq;
  seq.reserve(seq_orig.size());
  for (int x : seq_orig) {
    int m = mapv(x);
    if (m < 0) return "sequence names a vertex outside the subgraph";
    seq.push_back(m);
  }
  if (!ham::validate_witness(h, q, seq)) return "sequence fails validation";
  return {};
}

// Splits an exit-path subclaim into its coverage prefix and endpoint pair.
bool split_exit_path(const std::string& subclaim, std::string& prefix, int& p,
                     int& q) {
  std::size_t at = subclaim.find(":ends=");
  if (at == std::string::npos) return false;
  prefix = subclaim.substr(0, at);
  std::string ends = subclaim.substr(at + 6);
  std::size_t dash = ends.find('-');
  if (dash == std::string::npos) return false;
  return parse_int(ends.substr(0, dash), p) &&
         parse_int(ends.substr(dash + 1), q);
}

}  // namespace

ReplayOutcome replay(const Graph& g, const Certificate& cert) {
  auto cp = parse_claim(cert.claim);
  if (!cp) return {false, "unrecognized claim: " + cert.claim};
  if (cp->hash != graph_hash(g))
    return {false, "claim hash does not match the supplied graph"};

  Coverage cov;
  if (auto err = build_coverage(g, *cp, cov); !err.empty())
    return {false, err};

  auto fail = [](const std::string& subclaim,
                 const std::string& why) -> ReplayOutcome {
    return {false, "record '" + subclaim + "': " + why};
  };

  for (const auto& a : cert.attestations) {
    auto it = cov.index.find(a.subclaim);
    if (it == cov.index.end()) return fail(a.subclaim, "not part of this claim");
    Entry& e = cov.entries[it->second];
    if (e.is_witness) return fail(a.subclaim, "expected a witness record");
    if (e.seen) return fail(a.subclaim, "duplicate record");
    e.seen = true;
    if (!a.completed) return fail(a.subclaim, "attestation did not complete");
    if (e.value && (!a.value || *a.value != *e.value))
      return fail(a.subclaim, "recorded value disagrees with the graph");
  }

  for (const auto& w : cert.witnesses) {
    Entry* e = nullptr;
    int endp = -1, endq = -1;
    if (auto it = cov.index.find(w.subclaim); it != cov.index.end()) {
      e = &cov.entries[it->second];
    } else {
      std::string prefix;
      if (split_exit_path(w.subclaim, prefix, endp, endq)) {
        if (auto pit = cov.index.find(prefix); pit != cov.index.end())
          e = &cov.entries[pit->second];
      }
    }
    if (!e) return fail(w.subclaim, "not part of this claim");
    if (!e->is_witness) return fail(w.subclaim, "expected an attestation");
    if (e->seen) return fail(w.subclaim, "duplicate record");
    e->seen = true;

    BuildSpec spec = e->spec;
    if (spec.ends_from_subclaim) {
      bool ok = endp >= 0 && endq >= 0 && endp < endq &&
                (endp == cp->a || endp == cp->b || endp == cp->c) &&
                (endq == cp->a || endq == cp->b || endq == cp->c);
      if (!ok) return fail(w.subclaim, "endpoints are not two exit labels");
      spec.start = endp;
      spec.end = endq;
    } else if (endp >= 0) {
      return fail(w.subclaim, "not part of this claim");
    }
    if (auto err = check_witness(g, spec, w.seq); !err.empty())
      return fail(w.subclaim, err);
  }

  for (const Entry& e : cov.entries) {
    if (!e.seen) return {false, "missing record '" + e.key + "'"};
  }
  return {true, "replayed " + std::to_string(cert.record_count()) +
                    " records for claim " + cert.claim};
}

}  // namespace mnt::verify
