#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mntkit/blocks.hpp"
#include "mntkit/certificate.hpp"
#include "mntkit/dot.hpp"
#include "mntkit/graph6.hpp"
#include "mntkit/inflate.hpp"
#include "mntkit/min_search.hpp"
#include "mntkit/verify.hpp"

namespace {

using mnt::Graph;

constexpr const char* kSnark22Path = "data/snark22.block";

// 0 success/certified, 1 refuted or failed check, 2 usage/input error,
// 3 block-certification failure (build), 4 incomplete (budget ran out).
constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kBlockFail = 3;
constexpr int kIncomplete = 4;

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

mnt::blocks::BlockSpec resolve_block(const std::string& sel) {
  if (sel == "petersen") return mnt::blocks::petersen();
  if (sel == "coxeter") return mnt::blocks::coxeter();
  if (sel.rfind("jk=", 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(sel.substr(3), &used);
      if (used != sel.size() - 3) throw std::invalid_argument(sel);
    } catch (const std::exception&) {
      throw mnt::PreconditionError("bad flower-snark selector '" + sel +
                                   "' (want jk=<odd k >= 5>)");
    }
    return mnt::blocks::flower_snark(k);
  }
  if (sel == "snark22") {
    if (!std::filesystem::exists(kSnark22Path))
      throw mnt::PreconditionError(
          std::string("snark22 needs an adjacency file at ") + kSnark22Path +
          " (not shipped; see data/README.md)");
    return mnt::blocks::snark22(kSnark22Path);
  }
  if (!std::filesystem::exists(sel))
    throw mnt::PreconditionError(
        "unknown block selector or missing block file: " + sel);
  return mnt::blocks::load_block_file_path(sel);
}

struct LoadedInput {
  Graph graph;
  std::optional<mnt::blocks::BlockSpec> block;
  std::vector<std::string> comments;  // '#' lines, marker stripped
};

LoadedInput read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mnt::PreconditionError("cannot open input file: " + path);
  std::vector<std::string> comments, payload;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      comments.push_back(trim(t.substr(1)));
      continue;
    }
    payload.push_back(t);
  }
  std::string name = std::filesystem::path(path).stem().string();
  if (payload.empty())
    throw mnt::PreconditionError("no graph6 line in " + path);
  if (payload.size() == 1)
    return {mnt::from_graph6(payload[0]), std::nullopt, std::move(comments)};
  if (payload.size() == 2) {
    std::istringstream ss(payload[0] + "\n" + payload[1] + "\n");
    auto spec = mnt::blocks::load_block_file(ss, name);
    Graph g = spec.graph;
    return {std::move(g), std::move(spec), std::move(comments)};
  }
  throw mnt::PreconditionError(
      "too many content lines in " + path +
      " (want one graph6 line, optionally one block header line)");
}

// Writes to --out when given, else to stdout.
int with_output(const std::string& out_path,
                const std::function<void(std::ostream&)>& emit) {
  if (out_path.empty()) {
    emit(std::cout);
    return kOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kUsage;
  }
  emit(out);
  return kOk;
}

int verdict_exit(const mnt::verify::Certificate& cert) {
  switch (cert.verdict) {
    case mnt::verify::Verdict::certified:
      return kOk;
    case mnt::verify::Verdict::refuted:
      return kRefuted;
    default:
      return kIncomplete;
  }
}

// Prints the verdict to stderr and the certificate records to --out/stdout.
int finish_certificate(const mnt::verify::Certificate& cert,
                       const std::string& out_path) {
  std::cerr << cert.claim << ": " << mnt::verify::verdict_name(cert.verdict);
  if (!cert.detail.empty()) std::cerr << " (" << cert.detail << ")";
  std::cerr << " [" << cert.record_count() << " records]\n";
  int io = with_output(out_path,
                       [&](std::ostream& os) { mnt::verify::write_jsonl(os, cert); });
  return io != kOk ? io : verdict_exit(cert);
}

mnt::blocks::BlockSpec block_or_default(const LoadedInput& in,
                                        const std::string& name) {
  if (in.block) return *in.block;
  // No header: open at vertex 0 with its neighbours as exits (ascending).
  std::vector<int> ex;
  in.graph.neighbors(0).for_each([&](int x) { ex.push_back(x); });
  if (ex.size() != 3)
    throw mnt::PreconditionError(
        "input is not cubic; cannot pick default exits");
  return {name, in.graph, 0, {ex[0], ex[1], ex[2]}};
}

// Inflation metadata comment, machine-parsable by export-dot.
std::string inflation_meta(const mnt::inflate::Inflation& inf) {
  auto triple = [&](int role) {
    std::string s;
    for (int i = 0; i < 3; ++i) {
      if (i) s += ',';
      s += std::to_string(inf.exit_of[i][role]);
    }
    return s;
  };
  return "k4 hub=" + std::to_string(inf.hub) + " a=" + triple(0) +
         " b=" + triple(1) + " c=" + triple(2);
}

void style_from_comments(const std::vector<std::string>& comments,
                         mnt::DotStyle& style) {
  for (const auto& c : comments) {
    if (c.rfind("k4 ", 0) != 0) continue;
    std::istringstream ss(c.substr(3));
    std::string tok;
    while (ss >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) continue;
      std::string key = tok.substr(0, eq);
      std::string val = tok.substr(eq + 1);
      if (key == "hub") {
        style.fillcolor[std::stoi(val)] = "gold";
        style.note[std::stoi(val)] = "hub";
      } else if (key == "a" || key == "b" || key == "c") {
        const char* color = key == "a"   ? "lightskyblue"
                            : key == "b" ? "palegreen"
                                         : "lightsalmon";
        std::istringstream vs(val);
        std::string item;
        while (std::getline(vs, item, ','))
          if (!item.empty()) {
            style.fillcolor[std::stoi(item)] = color;
            style.note[std::stoi(item)] = key;
          }
      }
    }
  }
}

int run_gen(const std::string& selector, const std::string& out_path) {
  auto spec = resolve_block(selector);
  return with_output(out_path, [&](std::ostream& os) {
    mnt::blocks::write_block_file(os, spec);
  });
}

int run_build(const std::vector<std::string>& sels, bool force,
              const std::string& out_path, const mnt::verify::Options& opt) {
  std::vector<mnt::blocks::BlockSpec> specs;
  for (const auto& s : sels) specs.push_back(resolve_block(s));
  if (!force) {
    for (const auto& spec : specs) {
      auto mhh = mnt::verify::is_mhh(spec.graph, opt);
      if (!mhh.certified()) {
        std::cerr << "block '" << spec.name << "' failed MHH certification: "
                  << mnt::verify::verdict_name(mhh.verdict) << " ("
                  << mhh.detail << ")\n";
        return kBlockFail;
      }
      auto cc = mnt::verify::condition_C(spec, opt);
      if (!cc.certified()) {
        std::cerr << "block '" << spec.name
                  << "' failed the opening condition: "
                  << mnt::verify::verdict_name(cc.verdict) << " (" << cc.detail
                  << ")\n";
        return kBlockFail;
      }
    }
  }
  auto inf = mnt::inflate::k4_inflate(mnt::inflate::open_at(specs[0]),
                                      mnt::inflate::open_at(specs[1]),
                                      mnt::inflate::open_at(specs[2]));
  std::cerr << "built n=" << inf.graph.vertex_count()
            << " |E|=" << inf.graph.edge_count() << "\n";
  return with_output(out_path, [&](std::ostream& os) {
    os << inf.provenance << "\n";
    os << "# " << inflation_meta(inf) << "\n";
    os << mnt::to_graph6(inf.graph) << "\n";
  });
}

int run_verify(const std::string& file, const std::string& prop,
               const std::string& out_path, const mnt::verify::Options& opt) {
  auto in = read_input(file);
  using namespace mnt::verify;
  if (prop == "mnt") return finish_certificate(is_mnt(in.graph, opt), out_path);
  if (prop == "mnh") return finish_certificate(is_mnh(in.graph, opt), out_path);
  if (prop == "hypo")
    return finish_certificate(is_hypohamiltonian(in.graph, opt), out_path);
  if (prop == "mhh") return finish_certificate(is_mhh(in.graph, opt), out_path);
  if (prop == "condC") {
    if (!in.block)
      throw mnt::PreconditionError(
          "condC needs a block file with a 'z= a= b= c=' header line");
    return finish_certificate(condition_C(*in.block, opt), out_path);
  }
  if (prop == "extC") {
    auto block = block_or_default(in, file);
    return finish_certificate(extended_condition(block, opt), out_path);
  }
  if (prop == "bounds") {
    auto cert = is_mnt(in.graph, opt);
    int rc = finish_certificate(cert, out_path);
    if (rc != kOk) return rc;
    bool ok = bound_check(in.graph, cert);
    int n = in.graph.vertex_count();
    int m = in.graph.count_degree2();
    std::cerr << "bounds: |E|=" << in.graph.edge_count()
              << (ok ? " >= " : " < ") << edge_bound(n, m) << " = minimum for n="
              << n << ", " << m << " degree-2 vertices\n";
    return ok ? kOk : kRefuted;
  }
  if (prop == "lemmas") {
    if (in.block)
      return finish_certificate(lemma_hypo_paths_check(*in.block, opt),
                                out_path);
    auto cert = is_mnt(in.graph, opt);
    int rc = finish_certificate(cert, out_path);
    if (rc != kOk) return rc;
    auto deg2 = deg2_structure_check(in.graph);
    for (const auto& v : deg2.violations)
      std::cerr << "degree-2 structure: " << v << "\n";
    auto sweep = lemma_subgraph_sweep(in.graph, cert, 5);
    std::cerr << "degree-2 structure: "
              << (deg2.ok ? "clean" : "violated") << "; short-path sweep: "
              << sweep.paths_checked << " checked, " << sweep.skipped_complete
              << " skipped, " << (sweep.all_hold ? "all hold" : "violated")
              << "\n";
    return (deg2.ok && sweep.all_hold) ? kOk : kRefuted;
  }
  throw mnt::PreconditionError(
      "unknown property '" + prop +
      "' (want mnt|mnh|hypo|mhh|condC|extC|bounds|lemmas)");
}

int run_replay(const std::string& graph_file, const std::string& cert_file) {
  auto in = read_input(graph_file);
  std::ifstream cf(cert_file);
  if (!cf) throw mnt::PreconditionError("cannot open certificate: " + cert_file);
  auto cert = mnt::verify::read_jsonl(cf);
  auto outcome = mnt::verify::replay(in.graph, cert);
  std::cerr << (outcome.ok ? "replay ok: " : "replay failed: ")
            << outcome.message << "\n";
  return outcome.ok ? kOk : kRefuted;
}

int run_orders(int n_max, const std::string& out_path) {
  auto table = mnt::inflate::achievable_orders(n_max);
  return with_output(out_path, [&](std::ostream& os) {
    for (const auto& [n, triples] : table)
      for (const auto& t : triples)
        os << n << ' ' << t[0] << '+' << t[1] << '+' << t[2] << "\n";
  });
}

int run_search_min(int n, bool emit, const std::string& out_path,
                   const mnt::verify::Options& opt) {
  auto res = mnt::exhaustive_min_search(n, opt);
  return with_output(out_path, [&](std::ostream& os) {
    os << "n=" << n << " min_edges=";
    if (res.min_size)
      os << *res.min_size;
    else
      os << "none";
    os << " extremal=" << res.extremal.size() << "\n";
    if (emit)
      for (const auto& g : res.extremal) os << mnt::to_graph6(g) << "\n";
  });
}

int run_export_dot(const std::string& file, const std::string& out_path) {
  auto in = read_input(file);
  mnt::DotStyle style;
  std::string stem = std::filesystem::path(file).stem().string();
  std::string clean;
  for (char ch : stem)
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')
      clean += ch;
  if (!clean.empty() && !std::isdigit(static_cast<unsigned char>(clean[0])))
    style.graph_name = clean;
  style.comments = in.comments;
  style_from_comments(in.comments, style);
  if (in.block) {
    style.fillcolor[in.block->opened_at] = "gold";
    style.note[in.block->opened_at] = "z";
    const char* colors[3] = {"lightskyblue", "palegreen", "lightsalmon"};
    const char* names[3] = {"a", "b", "c"};
    for (int i = 0; i < 3; ++i) {
      style.fillcolor[in.block->exits[i]] = colors[i];
      style.note[in.block->exits[i]] = names[i];
    }
  }
  return with_output(out_path, [&](std::ostream& os) {
    os << mnt::to_dot(in.graph, style);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Builds cubic maximal-nontraceable graphs by joining three opened "
      "maximal-hypohamiltonian blocks through a hub, and certifies every "
      "claimed property with replayable witness files."};
  app.require_subcommand(1);

  int workers = 1;
  std::uint64_t budget_val = 0;
  std::vector<CLI::Option*> budget_opts;
  std::string out_path;
  bool force = false, emit = false;

  auto add_common = [&](CLI::App* cmd, bool with_out = true) {
    cmd->add_option("--workers", workers, "parallel solver workers")
        ->check(CLI::PositiveNumber);
    budget_opts.push_back(cmd->add_option(
        "--budget", budget_val, "search-node budget per solver query"));
    if (with_out) cmd->add_option("--out", out_path, "write output here");
  };

  std::string gen_sel;
  auto* gen = app.add_subcommand("gen", "emit a block file");
  gen->add_option("block", gen_sel,
                  "petersen|coxeter|jk=<k>|snark22|<block-file>")
      ->required();
  gen->add_option("--out", out_path, "write output here");

  std::vector<std::string> build_sels;
  auto* build = app.add_subcommand("build", "inflate three blocks into a "
                                            "cubic MNT graph");
  build->add_option("blocks", build_sels, "three block selectors")
      ->expected(3);
  build->add_flag("--force", force, "skip block certification");
  add_common(build);

  std::string verify_file, verify_prop;
  auto* verify = app.add_subcommand("verify", "certify a property of a "
                                              "graph6/block file");
  verify->add_option("file", verify_file, "graph6 or block file")->required();
  verify->add_option("property", verify_prop,
                     "mnt|mnh|hypo|mhh|condC|extC|bounds|lemmas")
      ->required();
  add_common(verify);

  std::string replay_graph, replay_cert;
  auto* replay = app.add_subcommand("replay", "re-check a certificate "
                                              "without the solver");
  replay->add_option("file", replay_graph, "graph6 or block file")->required();
  replay->add_option("certificate", replay_cert, "JSON-lines certificate")
      ->required();

  int orders_max = 0;
  auto* orders = app.add_subcommand("orders", "achievable construction "
                                              "orders up to n");
  orders->add_option("n_max", orders_max, "largest order to report")
      ->required()
      ->check(CLI::Range(1, 200));
  orders->add_option("--out", out_path, "write output here");

  int search_n = 0;
  auto* search = app.add_subcommand("search-min", "exhaustive minimum-size "
                                                  "search at small orders");
  search->add_option("n", search_n, "order, 4..7")->required();
  search->add_flag("--emit", emit, "also print extremal graphs as graph6");
  add_common(search);

  std::string dot_file;
  auto* exportd = app.add_subcommand("export-dot", "emit Graphviz DOT");
  exportd->add_option("file", dot_file, "graph6 or block file")->required();
  exportd->add_option("--out", out_path, "write output here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  mnt::verify::Options opt;
  opt.workers = workers;
  for (const auto* o : budget_opts)
    if (o->count()) opt.node_budget = budget_val;

  try {
    if (gen->parsed()) return run_gen(gen_sel, out_path);
    if (build->parsed()) return run_build(build_sels, force, out_path, opt);
    if (verify->parsed())
      return run_verify(verify_file, verify_prop, out_path, opt);
    if (replay->parsed()) return run_replay(replay_graph, replay_cert);
    if (orders->parsed()) return run_orders(orders_max, out_path);
    if (search->parsed())
      return run_search_min(search_n, emit, out_path, opt);
    if (exportd->parsed()) return run_export_dot(dot_file, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
