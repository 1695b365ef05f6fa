#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "sg/canonical.hpp"
#include "sg/families.hpp"
#include "sg/inertia.hpp"
#include "sg/io.hpp"
#include "sg/structure.hpp"
#include "sg/verify.hpp"

namespace py = pybind11;

namespace {

sg::SignedGraph build_graph(int n, const std::vector<std::tuple<int, int, int>>& edges) {
  std::vector<sg::SignedEdge> list;
  list.reserve(edges.size());
  for (const auto& [u, v, s] : edges) list.push_back({u, v, s});
  return sg::SignedGraph::build(n, list);
}

py::int_ to_py_int(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object tag_to_py(const std::optional<sg::FamilyTag>& tag) {
  if (!tag) return py::none();
  py::dict params;
  for (const auto& [key, value] : tag->params) params[py::str(key)] = value;
  py::dict out;
  out["theorem"] = tag->theorem;
  out["family"] = tag->family;
  out["params"] = params;
  return out;
}

py::dict classification_to_py(const sg::InertiaClassification& c) {
  py::dict out;
  out["inertia"] = py::make_tuple(c.inertia.pos, c.inertia.neg, c.inertia.nul);
  out["girth"] = c.girth;
  out["relation"] = sg::to_string(c.relation);
  out["tag"] = tag_to_py(c.tag);
  out["consistent"] = c.consistent;
  return out;
}

py::dict report_to_py(const sg::VerificationReport& report) {
  py::dict out;
  out["theorem"] = report.theorem;
  out["instances"] = report.instances_checked;
  out["equality"] = report.equality_matches;
  py::list cexs;
  for (const sg::Counterexample& cex : report.counterexamples) {
    py::dict item;
    item["graph"] = cex.graph;
    item["detail"] = cex.detail;
    cexs.append(item);
  }
  out["counterexamples"] = cexs;
  out["wall_seconds"] = report.wall_seconds;
  return out;
}

sg::Balance to_balance(bool balanced) {
  return balanced ? sg::Balance::kBalanced : sg::Balance::kUnbalanced;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact computation of signed-graph inertia, girth, balance and "
            "the extremal families attaining the girth bounds";

  py::class_<sg::Inertia>(m, "Inertia")
      .def(py::init<int, int, int>(), py::arg("pos") = 0, py::arg("neg") = 0,
           py::arg("nul") = 0)
      .def_readonly("pos", &sg::Inertia::pos)
      .def_readonly("neg", &sg::Inertia::neg)
      .def_readonly("nul", &sg::Inertia::nul)
      .def(py::self == py::self)
      .def("__iter__",
           [](const sg::Inertia& i) {
             return py::iter(py::make_tuple(i.pos, i.neg, i.nul));
           })
      .def("__repr__", [](const sg::Inertia& i) { return "Inertia" + sg::to_string(i); });

  py::class_<sg::SignedGraph>(m, "SignedGraph")
      .def(py::init(&build_graph), py::arg("n"), py::arg("edges"),
           "Build from a vertex count and (u, v, sign) triples; sign is +1 or -1.")
      .def_property_readonly("order", &sg::SignedGraph::order)
      .def_property_readonly("size", &sg::SignedGraph::size)
      .def("sign", &sg::SignedGraph::sign, py::arg("u"), py::arg("v"))
      .def("has_edge", &sg::SignedGraph::has_edge, py::arg("u"), py::arg("v"))
      .def("degree", &sg::SignedGraph::degree, py::arg("v"))
      .def("edges",
           [](const sg::SignedGraph& g) {
             std::vector<std::tuple<int, int, int>> out;
             for (const sg::SignedEdge& e : g.edges()) out.emplace_back(e.u, e.v, e.sign);
             return out;
           })
      .def(py::self == py::self)
      .def("__repr__",
           [](const sg::SignedGraph& g) { return "SignedGraph(" + sg::to_string(g) + ")"; });

  // elementary transformations
  m.def(
      "switched",
      [](const sg::SignedGraph& g, const std::vector<int>& theta) {
        return sg::switched(g, sg::SwitchingFunction(theta));
      },
      py::arg("g"), py::arg("theta"), "Switch by a vector of +1/-1 vertex signs.");
  m.def("negated", &sg::negated, py::arg("g"));
  m.def(
      "induced_subgraph",
      [](const sg::SignedGraph& g, const std::vector<int>& vertices) {
        sg::InducedSubgraph sub = sg::induced_subgraph(g, vertices);
        return py::make_tuple(sub.graph, sub.vertex_map);
      },
      py::arg("g"), py::arg("vertices"),
      "Returns (subgraph, vertex_map) with vertex_map[new] = old.");
  m.def("add_twin", &sg::add_twin, py::arg("g"), py::arg("v"));
  m.def("find_twins", &sg::find_twins, py::arg("g"));
  m.def("is_reduced", &sg::is_reduced, py::arg("g"));

  // structure
  m.def("is_connected", &sg::is_connected, py::arg("g"));
  m.def(
      "girth",
      [](const sg::SignedGraph& g) -> py::object {
        std::optional<sg::ShortestCycle> cyc = sg::girth(g);
        if (!cyc) return py::none();
        return py::make_tuple(cyc->length, cyc->vertices);
      },
      py::arg("g"), "Returns (length, witness vertices) or None when acyclic.");
  m.def("girth_cycles", &sg::girth_cycles, py::arg("g"));
  m.def(
      "cycle_sign",
      [](const sg::SignedGraph& g, const std::vector<int>& cycle) {
        return sg::cycle_sign(g, cycle);
      },
      py::arg("g"), py::arg("cycle"));
  m.def("is_balanced", &sg::is_balanced, py::arg("g"));
  m.def(
      "check_balance",
      [](const sg::SignedGraph& g) {
        sg::BalanceResult result = sg::check_balance(g);
        py::dict out;
        out["balanced"] = result.balanced;
        if (result.balanced) {
          std::vector<int> theta;
          for (int v = 0; v < g.order(); ++v) theta.push_back(result.to_all_positive(v));
          out["switching"] = theta;
        } else {
          out["negative_cycle"] = result.negative_cycle;
        }
        return out;
      },
      py::arg("g"));
  m.def("switching_equivalent", &sg::switching_equivalent, py::arg("a"), py::arg("b"));
  m.def(
      "certificate",
      [](const sg::SignedGraph& g) {
        sg::SwitchingClassCertificate cert = sg::certificate(g);
        py::dict out;
        out["underlying"] = cert.underlying;
        out["tree_edges"] = cert.tree_edges;
        out["cotree_signs"] = cert.cotree_signs;
        return out;
      },
      py::arg("g"));
  m.def(
      "distance_layers",
      [](const sg::SignedGraph& g, const std::vector<int>& cycle) {
        return sg::distance_layers(g, cycle);
      },
      py::arg("g"), py::arg("cycle"));
  m.def("is_canonical_unicyclic", &sg::is_canonical_unicyclic, py::arg("g"));
  m.def(
      "pendant_star_decomposition",
      [](const sg::SignedGraph& g) {
        sg::PendantStarDecomposition dec = sg::pendant_star_decomposition(g);
        py::dict out;
        out["star_count"] = dec.star_count;
        out["majors"] = dec.majors;
        out["arc_orders"] = dec.arc_orders;
        return out;
      },
      py::arg("g"));
  m.def("canonical_graph6", &sg::canonical_graph6, py::arg("g"));
  m.def(
      "canonical_signed_class",
      [](const sg::SignedGraph& g) {
        sg::CanonicalSignedClass cls = sg::canonical_signed_class(g);
        return py::make_tuple(cls.underlying, cls.cotree_signs);
      },
      py::arg("g"));

  // exact inertia
  m.def("inertia_exact", &sg::inertia_exact, py::arg("g"));
  m.def("inertia_cycle_closed_form", &sg::inertia_cycle_closed_form, py::arg("n"),
        py::arg("balanced"));
  m.def("inertia_path_closed_form", &sg::inertia_path_closed_form, py::arg("n"));
  m.def("inertia_by_pendant_reduction", &sg::inertia_by_pendant_reduction, py::arg("g"));
  m.def(
      "determinant_exact",
      [](const sg::SignedGraph& g) { return to_py_int(sg::determinant_exact(g)); },
      py::arg("g"));

  // family constructors and classifiers
  m.def(
      "make_cycle",
      [](int n, bool balanced) { return sg::make_cycle(n, to_balance(balanced)); },
      py::arg("n"), py::arg("balanced") = true);
  m.def(
      "make_path",
      [](int n, const std::vector<int>& signs) { return sg::make_path(n, signs); },
      py::arg("n"), py::arg("signs") = std::vector<int>{});
  m.def(
      "make_complete_multipartite",
      [](const std::vector<int>& parts, bool all_positive) {
        return sg::make_complete_multipartite(
            parts, all_positive ? sg::MultipartiteVariant::kAllPositive
                                : sg::MultipartiteVariant::kAllTrianglesUnbalanced);
      },
      py::arg("parts"), py::arg("all_positive") = true);
  m.def("make_theta", &sg::make_theta, py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("sign_first") = 1, py::arg("sign_third") = 1);
  m.def(
      "make_cycle_star_join",
      [](int cycle_len, bool balanced, int r) {
        return sg::make_cycle_star_join(cycle_len, to_balance(balanced), r);
      },
      py::arg("cycle_len"), py::arg("balanced"), py::arg("r"));
  m.def(
      "make_canonical_unicyclic",
      [](int cycle_len, bool balanced, const std::vector<int>& leaf_counts) {
        return sg::make_canonical_unicyclic(cycle_len, to_balance(balanced), leaf_counts);
      },
      py::arg("cycle_len"), py::arg("balanced"), py::arg("leaf_counts"));
  m.def(
      "classify_negative_inertia",
      [](const sg::SignedGraph& g) {
        return classification_to_py(sg::classify_negative_inertia(g));
      },
      py::arg("g"));
  m.def(
      "classify_positive_inertia",
      [](const sg::SignedGraph& g) {
        return classification_to_py(sg::classify_positive_inertia(g));
      },
      py::arg("g"));
  m.def(
      "classify_nullity",
      [](const sg::SignedGraph& g) {
        sg::NullityClassification c = sg::classify_nullity(g);
        py::dict out;
        out["inertia"] = py::make_tuple(c.inertia.pos, c.inertia.neg, c.inertia.nul);
        out["girth"] = c.girth;
        out["relation"] = sg::to_string(c.relation);
        out["tag"] = tag_to_py(c.tag);
        out["consistent"] = c.consistent;
        return out;
      },
      py::arg("g"));
  m.def(
      "twin_peel",
      [](const sg::SignedGraph& g) {
        sg::TwinPeelResult result = sg::twin_peel(g);
        return py::make_tuple(result.reduced, result.peels);
      },
      py::arg("g"));

  // verification sweeps
  m.def(
      "verify_theorem",
      [](const std::string& id, int max_n, int jobs, std::optional<int> max_girth) {
        sg::EnumerationSpec spec;
        spec.max_n = max_n;
        spec.jobs = jobs;
        spec.max_girth = max_girth;
        return report_to_py(sg::verify_theorem(id, spec));
      },
      py::arg("id"), py::arg("max_n") = 5, py::arg("jobs") = 1,
      py::arg("max_girth") = py::none());
  m.def(
      "verify_structure_lemmas",
      [](int max_n) {
        sg::EnumerationSpec spec;
        spec.max_n = max_n;
        return report_to_py(sg::verify_structure_lemmas(spec));
      },
      py::arg("max_n") = 5);
  m.def(
      "derive_catalog",
      [](int girth_lo, int girth_hi, int max_n) {
        sg::EnumerationSpec spec;
        spec.max_n = max_n;
        spec.cyclomatic_cap = 2;
        sg::ExtremalCatalog catalog = sg::derive_catalog(girth_lo, girth_hi, spec);
        py::list out;
        for (const sg::CatalogEntry& e : catalog.entries()) {
          py::dict item;
          item["underlying"] = e.cls.underlying;
          item["cotree_signs"] = e.cls.cotree_signs;
          item["girth"] = e.girth;
          item["inertia"] = py::make_tuple(e.inertia.pos, e.inertia.neg, e.inertia.nul);
          item["order"] = e.order;
          item["branch"] = e.branch;
          item["provenance"] = e.provenance;
          item["anchor"] = e.anchor;
          out.append(item);
        }
        return out;
      },
      py::arg("girth_lo"), py::arg("girth_hi"), py::arg("max_n") = 8);

  // file format
  m.def("loads", &sg::parse_signed_graph, py::arg("text"));
  m.def("dumps", &sg::serialize_signed_graph, py::arg("g"));
  m.def("load", &sg::load_signed_graph, py::arg("path"));
  m.def("save", &sg::save_signed_graph, py::arg("g"), py::arg("path"));
}
