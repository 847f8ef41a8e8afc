// Python bindings for the toolkit's main operations. Heavy certification
// and search calls release the GIL; enum-like results come back as plain
// strings / dicts so callers never need the C++ types.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mntkit/blocks.hpp"
#include "mntkit/certificate.hpp"
#include "mntkit/dot.hpp"
#include "mntkit/graph.hpp"
#include "mntkit/graph6.hpp"
#include "mntkit/ham.hpp"
#include "mntkit/inflate.hpp"
#include "mntkit/min_search.hpp"
#include "mntkit/verify.hpp"

namespace py = pybind11;
using namespace mnt;

namespace {

ham::Query build_query(const std::string& kind, std::optional<int> start,
                       std::optional<int> end,
                       const std::vector<std::pair<int, int>>& required,
                       std::optional<std::uint64_t> budget) {
  ham::Query q;
  if (kind == "path")
    q.kind = ham::Kind::path;
  else if (kind == "cycle")
    q.kind = ham::Kind::cycle;
  else
    throw PreconditionError("kind must be 'path' or 'cycle'");
  q.start = start;
  q.end = end;
  q.required_edges = required;
  q.node_budget = budget;
  return q;
}

verify::Options make_options(int workers, std::optional<std::uint64_t> budget) {
  verify::Options o;
  o.workers = workers;
  o.node_budget = budget;
  return o;
}

py::dict result_dict(const ham::Result& r) {
  py::dict d;
  d["verdict"] = r.verdict == ham::Verdict::found  ? "found"
                 : r.verdict == ham::Verdict::none ? "none"
                                                   : "budget_exhausted";
  d["witness"] = r.witness;
  d["nodes"] = r.attestation.nodes_expanded;
  d["completed"] = r.attestation.completed;
  return d;
}

py::object tri_to_py(verify::Tri t) {
  if (t == verify::Tri::unknown) return py::none();
  return py::bool_(t == verify::Tri::yes);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Cubic maximal-nontraceable graphs: block-based construction, "
      "certification with replayable witness files, exhaustive minimum "
      "search at small orders.";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<const Graph&>())
      .def("vertex_count", &Graph::vertex_count)
      .def("edge_count", &Graph::edge_count)
      .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
      .def("remove_edge", &Graph::remove_edge, py::arg("u"), py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("degrees", &Graph::degrees)
      .def("is_cubic", &Graph::is_cubic)
      .def("count_degree2", &Graph::count_degree2)
      .def("min_degree", &Graph::min_degree)
      .def(
          "neighbors",
          [](const Graph& g, int v) {
            std::vector<int> out;
            g.neighbors(v).for_each([&](int u) { out.push_back(u); });
            return out;
          },
          py::arg("v"))
      .def("edges", &Graph::edges)
      .def("nonedges", &Graph::nonedges)
      .def("girth", &Graph::girth)
      .def("is_connected", &Graph::is_connected)
      .def("is_two_connected", &Graph::is_two_connected)
      .def(
          "induced_subgraph",
          [](const Graph& g, const std::vector<int>& vs) {
            auto r = g.induced_subgraph(vs);
            return py::make_tuple(r.graph, r.old_to_new);
          },
          py::arg("vertices"),
          "Returns (subgraph, old_to_new); dropped vertices map to -1.")
      .def(
          "delete_vertex",
          [](const Graph& g, int v) {
            auto r = g.delete_vertex(v);
            return py::make_tuple(r.graph, r.old_to_new);
          },
          py::arg("v"))
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        std::ostringstream os;
        os << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count()
           << ")";
        return os.str();
      });

  m.def("to_graph6", &to_graph6, py::arg("graph"));
  m.def("from_graph6", &from_graph6, py::arg("record"));

  py::class_<blocks::BlockSpec>(m, "BlockSpec")
      .def_readonly("name", &blocks::BlockSpec::name)
      .def_readonly("graph", &blocks::BlockSpec::graph)
      .def_readonly("opened_at", &blocks::BlockSpec::opened_at)
      .def_readonly("exits", &blocks::BlockSpec::exits)
      .def("__repr__", [](const blocks::BlockSpec& b) {
        std::ostringstream os;
        os << "BlockSpec(name='" << b.name << "', n="
           << b.graph.vertex_count() << ", opened_at=" << b.opened_at << ")";
        return os.str();
      });

  m.def("petersen", &blocks::petersen);
  m.def("coxeter", &blocks::coxeter);
  m.def("flower_snark", &blocks::flower_snark, py::arg("k"));
  m.def("load_block_file", &blocks::load_block_file_path, py::arg("path"));
  m.def("snark22", &blocks::snark22, py::arg("path"));
  m.def(
      "make_block",
      [](const std::string& name, const Graph& g, int opened_at,
         const std::array<int, 3>& exits) {
        blocks::BlockSpec spec{name, g, opened_at, exits};
        blocks::validate_block(spec);
        return spec;
      },
      py::arg("name"), py::arg("graph"), py::arg("opened_at"),
      py::arg("exits"));

  py::class_<inflate::Inflation>(m, "Inflation")
      .def_readonly("graph", &inflate::Inflation::graph)
      .def_readonly("hub", &inflate::Inflation::hub)
      .def_readonly("block_names", &inflate::Inflation::block_names)
      .def_readonly("exit_of", &inflate::Inflation::exit_of)
      .def_readonly("provenance", &inflate::Inflation::provenance);

  m.def(
      "k4_inflate",
      [](const blocks::BlockSpec& b1, const blocks::BlockSpec& b2,
         const blocks::BlockSpec& b3) {
        return inflate::k4_inflate(inflate::open_at(b1), inflate::open_at(b2),
                                   inflate::open_at(b3));
      },
      py::arg("block1"), py::arg("block2"), py::arg("block3"),
      "Open each block at its designated vertex and join the three "
      "interiors through a fresh hub.");
  m.def("achievable_orders", &inflate::achievable_orders, py::arg("n_max"));

  m.def(
      "solve",
      [](const Graph& g, const std::string& kind, std::optional<int> start,
         std::optional<int> end,
         const std::vector<std::pair<int, int>>& required,
         std::optional<std::uint64_t> budget) {
        auto q = build_query(kind, start, end, required, budget);
        ham::Result r;
        {
          py::gil_scoped_release release;
          r = ham::solve(g, q);
        }
        return result_dict(r);
      },
      py::arg("graph"), py::arg("kind") = "path",
      py::arg("start") = std::nullopt, py::arg("end") = std::nullopt,
      py::arg("required") = std::vector<std::pair<int, int>>{},
      py::arg("budget") = std::nullopt);
  m.def(
      "oracle_solve",
      [](const Graph& g, const std::string& kind, std::optional<int> start,
         std::optional<int> end,
         const std::vector<std::pair<int, int>>& required) {
        auto q = build_query(kind, start, end, required, std::nullopt);
        ham::Result r;
        {
          py::gil_scoped_release release;
          r = ham::oracle_solve(g, q);
        }
        return result_dict(r);
      },
      py::arg("graph"), py::arg("kind") = "path",
      py::arg("start") = std::nullopt, py::arg("end") = std::nullopt,
      py::arg("required") = std::vector<std::pair<int, int>>{});
  m.def(
      "validate_witness",
      [](const Graph& g, const std::vector<int>& seq, const std::string& kind,
         std::optional<int> start, std::optional<int> end,
         const std::vector<std::pair<int, int>>& required) {
        auto q = build_query(kind, start, end, required, std::nullopt);
        return ham::validate_witness(g, q, seq);
      },
      py::arg("graph"), py::arg("seq"), py::arg("kind") = "path",
      py::arg("start") = std::nullopt, py::arg("end") = std::nullopt,
      py::arg("required") = std::vector<std::pair<int, int>>{});

  py::class_<verify::Certificate>(m, "Certificate")
      .def_readonly("claim", &verify::Certificate::claim)
      .def_property_readonly("verdict",
                             [](const verify::Certificate& c) {
                               return verify::verdict_name(c.verdict);
                             })
      .def_readonly("detail", &verify::Certificate::detail)
      .def_property_readonly("certified", &verify::Certificate::certified)
      .def_property_readonly("record_count",
                             &verify::Certificate::record_count)
      .def_property_readonly("witnesses",
                             [](const verify::Certificate& c) {
                               py::list out;
                               for (const auto& w : c.witnesses)
                                 out.append(py::make_tuple(w.subclaim, w.seq));
                               return out;
                             })
      .def_property_readonly("attestations",
                             [](const verify::Certificate& c) {
                               py::list out;
                               for (const auto& a : c.attestations) {
                                 py::dict d;
                                 d["subclaim"] = a.subclaim;
                                 d["nodes"] = a.nodes;
                                 d["completed"] = a.completed;
                                 d["value"] = a.value;
                                 out.append(d);
                               }
                               return out;
                             })
      .def("to_jsonl",
           [](const verify::Certificate& c) { return verify::to_jsonl(c); })
      .def("__repr__", [](const verify::Certificate& c) {
        std::ostringstream os;
        os << "Certificate(claim='" << c.claim
           << "', verdict=" << verify::verdict_name(c.verdict) << ", records="
           << c.record_count() << ")";
        return os.str();
      });

  m.def("read_jsonl", [](const std::string& text) {
    std::istringstream in(text);
    return verify::read_jsonl(in);
  });
  m.def(
      "replay",
      [](const Graph& g, const verify::Certificate& c) {
        auto r = verify::replay(g, c);
        py::dict d;
        d["ok"] = r.ok;
        d["message"] = r.message;
        return d;
      },
      py::arg("graph"), py::arg("certificate"),
      "Re-check a certificate without the solver.");
  m.def("graph_hash", &verify::graph_hash, py::arg("graph"));

  auto graph_prop = [&m](const char* name,
                         verify::Certificate (*fn)(const Graph&,
                                                   const verify::Options&)) {
    m.def(
        name,
        [fn](const Graph& g, int workers,
             std::optional<std::uint64_t> budget) {
          py::gil_scoped_release release;
          return fn(g, make_options(workers, budget));
        },
        py::arg("graph"), py::arg("workers") = 1,
        py::arg("budget") = std::nullopt);
  };
  graph_prop("is_mnt", &verify::is_mnt);
  graph_prop("is_mnh", &verify::is_mnh);
  graph_prop("is_hypohamiltonian", &verify::is_hypohamiltonian);
  graph_prop("certify_cubic_mnt", &verify::certify_cubic_mnt);
  m.def(
      "is_mhh",
      [](const Graph& g, int workers, std::optional<std::uint64_t> budget) {
        py::gil_scoped_release release;
        return verify::is_mhh(g, make_options(workers, budget));
      },
      py::arg("graph"), py::arg("workers") = 1,
      py::arg("budget") = std::nullopt);

  auto block_prop = [&m](const char* name,
                         verify::Certificate (*fn)(const blocks::BlockSpec&,
                                                   const verify::Options&)) {
    m.def(
        name,
        [fn](const blocks::BlockSpec& b, int workers,
             std::optional<std::uint64_t> budget) {
          py::gil_scoped_release release;
          return fn(b, make_options(workers, budget));
        },
        py::arg("block"), py::arg("workers") = 1,
        py::arg("budget") = std::nullopt);
  };
  block_prop("condition_C", &verify::condition_C);
  block_prop("extended_condition", &verify::extended_condition);
  block_prop("lemma_hypo_paths_check", &verify::lemma_hypo_paths_check);

  m.def(
      "is_traceable",
      [](const Graph& g, int workers, std::optional<std::uint64_t> budget) {
        verify::Tri t;
        {
          py::gil_scoped_release release;
          t = verify::is_traceable(g, make_options(workers, budget));
        }
        return tri_to_py(t);
      },
      py::arg("graph"), py::arg("workers") = 1,
      py::arg("budget") = std::nullopt,
      "True / False / None (None: the node budget ran out).");
  m.def(
      "is_hamiltonian",
      [](const Graph& g, int workers, std::optional<std::uint64_t> budget) {
        verify::Tri t;
        {
          py::gil_scoped_release release;
          t = verify::is_hamiltonian(g, make_options(workers, budget));
        }
        return tri_to_py(t);
      },
      py::arg("graph"), py::arg("workers") = 1,
      py::arg("budget") = std::nullopt);

  m.def("edge_bound", &verify::edge_bound, py::arg("n"), py::arg("m"),
        "Minimum size of a 2-connected maximal-nontraceable graph of order "
        "n with m degree-2 vertices (defined for n >= 7).");
  m.def("bound_check", &verify::bound_check, py::arg("graph"),
        py::arg("mnt_certificate"));
  m.def(
      "deg2_structure_check",
      [](const Graph& g) {
        auto r = verify::deg2_structure_check(g);
        py::dict d;
        d["ok"] = r.ok;
        d["violations"] = r.violations;
        return d;
      },
      py::arg("graph"));
  m.def("lemma_subgraph_check", &verify::lemma_subgraph_check,
        py::arg("graph"), py::arg("mnt_certificate"), py::arg("path"));
  m.def(
      "lemma_subgraph_sweep",
      [](const Graph& g, const verify::Certificate& c, int max_edges) {
        verify::PathSweep s;
        {
          py::gil_scoped_release release;
          s = verify::lemma_subgraph_sweep(g, c, max_edges);
        }
        py::dict d;
        d["paths_checked"] = s.paths_checked;
        d["skipped_complete"] = s.skipped_complete;
        d["all_hold"] = s.all_hold;
        d["counterexample"] = s.counterexample;
        return d;
      },
      py::arg("graph"), py::arg("mnt_certificate"), py::arg("max_edges"));

  m.def(
      "exhaustive_min_search",
      [](int n, int workers, std::optional<std::uint64_t> budget) {
        MinSearchResult r;
        {
          py::gil_scoped_release release;
          r = exhaustive_min_search(n, make_options(workers, budget));
        }
        py::dict d;
        d["min_size"] = r.min_size;
        d["extremal"] = r.extremal;
        d["graphs_considered"] = r.graphs_considered;
        return d;
      },
      py::arg("n"), py::arg("workers") = 1, py::arg("budget") = std::nullopt,
      "Scan every labeled graph of order n (4..7) for 2-connected "
      "maximal-nontraceable graphs of minimum size.");

  m.def(
      "to_dot",
      [](const Graph& g, const std::string& name,
         const std::vector<std::string>& comments,
         const std::map<int, std::string>& fillcolor,
         const std::map<int, std::string>& note) {
        DotStyle style{name, comments, fillcolor, note};
        return to_dot(g, style);
      },
      py::arg("graph"), py::arg("name") = "G",
      py::arg("comments") = std::vector<std::string>{},
      py::arg("fillcolor") = std::map<int, std::string>{},
      py::arg("note") = std::map<int, std::string>{});
}
