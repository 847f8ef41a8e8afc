#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mntkit/graph.hpp"

namespace mnt::verify {

enum class Verdict { certified, refuted, incomplete };

std::string verdict_name(Verdict v);

// Positive evidence: one vertex sequence per subclaim, validated by
// ham::validate_witness at replay time. Sequences always use the labels of
// the claimed graph, also for subclaims about vertex-deleted subgraphs.
struct WitnessRecord {
  std::string subclaim;
  std::vector<int> seq;
};

// Negative evidence: an exhaustive search ran out of options (completed)
// after expanding `nodes` search states. Structural subclaims reuse this
// record shape with a recomputable `value`.
struct AttestRecord {
  std::string subclaim;
  std::uint64_t nodes = 0;
  bool completed = false;
  std::optional<std::int64_t> value;
};

// A claim plus its evidence. The claim string pins the property, a hash of
// the subject graph, and any vertex labels the property is parameterised
// on, so a serialized certificate is self-describing:
//   mnt:<hash>  mnh:<hash>  hypo:<hash>  mhh:<hash>  cubicmnt:<hash>
//   condC:<hash>:z=..:a=..:b=..:c=..   extC:<hash>
//   hypopaths:<hash>:z=..:a=..:b=..:c=..
// Only the claim and the records are serialized; replay re-derives the
// verdict, so a tampered file can never smuggle one in.
struct Certificate {
  std::string claim;
  Verdict verdict = Verdict::incomplete;
  std::string detail;  // refutation counterexample or incompleteness note
  std::vector<WitnessRecord> witnesses;
  std::vector<AttestRecord> attestations;

  bool certified() const { return verdict == Verdict::certified; }
  std::size_t record_count() const {
    return witnesses.size() + attestations.size();
  }
};

// 16 hex chars of FNV-1a over the graph6 encoding.
std::string graph_hash(const Graph& g);

// Claim strings. Block-parameterised claims carry the opening vertex and
// its three exit labels so replay can rebuild the exact queries.
std::string make_claim(const std::string& prop, const Graph& g);
std::string make_block_claim(const std::string& prop, const Graph& g, int z,
                             int a, int b, int c);

// Subclaim keys. Generation and replay both go through these so the two
// sides can never disagree on spelling. All labels are in the coordinates
// of the claimed graph, even for subclaims about vertex-deleted subgraphs.
namespace sub {

inline constexpr const char* nontraceable = "nontraceable";
inline constexpr const char* nonhamiltonian = "nonhamiltonian";
inline constexpr const char* cubic = "structure:cubic";
inline constexpr const char* two_connected = "structure:two-connected";
inline constexpr const char* order = "structure:order";
inline constexpr const char* size = "structure:size";
inline constexpr const char* girth = "structure:girth";

std::string nonedge(int u, int v);               // "nonedge=u-v", u < v
std::string deleted(int v);                      // "del=v"
std::string cond_c(int u, bool with_anchor);     // "u=..:with[out]-anchor-edge"
std::string ext_c(int z, int u, int v);          // "z=..:u=..:v=.."
std::string hypo_end(int y);                     // "end=y"
std::string no_exit_pair(int p, int q);          // "no-exit-pair=p-q", p < q
std::string bridge(int y, int p, int q);         // "bridge=y:p-q", p < q
std::string exit_path_prefix(int u, int v);      // "exit-path:nonedge=u-v"
std::string exit_path(int u, int v, int p, int q);  // ... + ":ends=p-q"

}  // namespace sub

// One JSON object per line: {claim, subclaim, kind, data}.
void write_jsonl(std::ostream& out, const Certificate& cert);
std::string to_jsonl(const Certificate& cert);
Certificate read_jsonl(std::istream& in);

struct ReplayOutcome {
  bool ok = false;
  std::string message;  // names the first offending record when !ok
};

// Re-check a certificate against g without any search: the claim hash must
// match, every witness must validate against its reconstructed query,
// every attestation must be completed (values recomputed for structural
// ones), and the record set must cover the claim exactly — nothing
// missing, nothing extra, nothing duplicated.
ReplayOutcome replay(const Graph& g, const Certificate& cert);

}  // namespace mnt::verify
