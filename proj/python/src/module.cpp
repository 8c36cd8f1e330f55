#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "ribbon/bernardi.hpp"
#include "ribbon/corpus.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/error.hpp"
#include "ribbon/io.hpp"
#include "ribbon/lab.hpp"
#include "ribbon/rotor.hpp"

namespace py = pybind11;
using namespace ribbon;

namespace {

using Chips = std::map<std::string, std::int64_t>;
using EdgeIds = std::vector<std::string>;

Divisor to_divisor(const RibbonGraph& g, const Chips& chips) {
  Divisor d(g.num_vertices());
  for (const auto& [id, k] : chips) d[g.vertex(id)] = k;
  return d;
}

Chips from_divisor(const RibbonGraph& g, const Divisor& d) {
  Chips out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) out[g.vertex_id(v)] = d[v];
  return out;
}

SpanningTree to_tree(const RibbonGraph& g, const EdgeIds& ids) {
  std::vector<Edge> edges;
  for (const auto& id : ids) edges.push_back(g.edge(id));
  std::sort(edges.begin(), edges.end());
  return SpanningTree(g, std::move(edges));
}

EdgeIds from_tree(const RibbonGraph& g, const SpanningTree& t) {
  EdgeIds out;
  for (Edge e : t.edges()) out.push_back(g.edge_id(e));
  return out;
}

DivisorClass to_class(const RibbonGraph& g, const Chips& chips) {
  const Divisor d = to_divisor(g, chips);
  if (d.degree() != 0) throw DegreeMismatch("the acting class must have degree 0");
  return class_of(g, d);
}

py::dict comparison(const GraphContext& ctx, const ActionComparison& cmp) {
  py::dict out;
  out["agree"] = cmp.agree;
  if (cmp.witness) {
    const RibbonGraph& g = ctx.graph();
    out["class"] = from_divisor(g, cmp.witness->gamma.reduced);
    out["tree"] = from_tree(g, ctx.trees()[cmp.witness->tree]);
    out["first"] = from_tree(g, ctx.trees()[cmp.witness->first]);
    out["second"] = from_tree(g, ctx.trees()[cmp.witness->second]);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Divisors, spanning trees and torsors on ribbon graphs";

  auto base = py::register_exception<Error>(m, "RibbonError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<NotBreakDivisor>(m, "NotBreakDivisor", base.ptr());
  py::register_exception<NotPlanar>(m, "NotPlanar", base.ptr());
  py::register_exception<HasBridge>(m, "HasBridge", base.ptr());
  py::register_exception<NotSimple>(m, "NotSimple", base.ptr());
  py::register_exception<DegreeMismatch>(m, "DegreeMismatch", base.ptr());

  py::class_<RibbonGraph>(m, "RibbonGraph")
      .def(py::init([](std::vector<std::string> vertices,
                       std::vector<std::pair<std::string, std::pair<std::string, std::string>>> edges,
                       std::map<std::string, EdgeIds> rotation) {
             std::map<std::string, Vertex> vindex;
             for (std::size_t i = 0; i < vertices.size(); ++i) vindex[vertices[i]] = i;
             std::map<std::string, Edge> eindex;
             std::vector<std::string> edge_ids;
             std::vector<EdgeEnds> ends;
             auto lookup = [&](const std::string& id) {
               auto it = vindex.find(id);
               if (it == vindex.end())
                 throw ValidationError(ValidationKind::kRotationMismatch, "unknown vertex '" + id + "'");
               return it->second;
             };
             for (const auto& [id, pair] : edges) {
               eindex[id] = edge_ids.size();
               edge_ids.push_back(id);
               ends.push_back({lookup(pair.first), lookup(pair.second)});
             }
             std::vector<std::vector<Edge>> rot(vertices.size());
             for (const auto& [v, list] : rotation)
               for (const auto& e : list) {
                 auto it = eindex.find(e);
                 if (it == eindex.end())
                   throw ValidationError(ValidationKind::kRotationMismatch, "unknown edge '" + e + "'");
                 rot[lookup(v)].push_back(it->second);
               }
             return RibbonGraph(std::move(vertices), std::move(edge_ids), std::move(ends), std::move(rot));
           }),
           py::arg("vertices"), py::arg("edges"), py::arg("rotation"))
      .def_static("from_json", [](const std::string& text) { return parse_ribbon_graph(text); })
      .def_static("load", &read_ribbon_graph)
      .def("to_json", &serialize_ribbon_graph)
      .def_property_readonly("vertices", &RibbonGraph::vertex_ids)
      .def_property_readonly("edges", &RibbonGraph::edge_ids)
      .def_property_readonly("genus", &RibbonGraph::genus)
      .def_property_readonly("topological_genus",
                             [](const RibbonGraph& g) { return trace_faces(g).topological_genus; })
      .def_property_readonly("num_faces",
                             [](const RibbonGraph& g) {
                               return g.num_edges() == 0 ? 1 : int(trace_faces(g).faces.size());
                             })
      .def_property_readonly("is_planar", [](const RibbonGraph& g) { return trace_faces(g).is_planar(); })
      .def("rotation",
           [](const RibbonGraph& g, const std::string& v) {
             EdgeIds out;
             for (Edge e : g.rotation(g.vertex(v))) out.push_back(g.edge_id(e));
             return out;
           })
      .def("ends",
           [](const RibbonGraph& g, const std::string& e) {
             const auto [a, b] = g.ends(g.edge(e));
             return std::make_pair(g.vertex_id(a), g.vertex_id(b));
           })
      .def("is_isomorphic", [](const RibbonGraph& a, const RibbonGraph& b) { return are_isomorphic(a, b); })
      .def("__eq__", [](const RibbonGraph& a, const RibbonGraph& b) { return a == b; })
      .def("__repr__", [](const RibbonGraph& g) {
        return "RibbonGraph(V=" + std::to_string(g.num_vertices()) +
               ", E=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("theta_graph", &theta_graph);
  m.def("triangle_graph", &triangle_graph);
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("rotation_systems", &rotation_systems, py::arg("graph"));
  m.def("default_corpus", [] {
    std::vector<std::pair<std::string, RibbonGraph>> out;
    for (auto& entry : default_corpus()) out.emplace_back(entry.name, std::move(entry.graph));
    return out;
  });

  m.def("spanning_trees", [](const RibbonGraph& g) {
    std::vector<EdgeIds> out;
    for (const auto& t : spanning_trees(g)) out.push_back(from_tree(g, t));
    return out;
  });
  m.def("break_divisors", [](const RibbonGraph& g) {
    std::vector<Chips> out;
    for (const auto& b : enumerate_break_divisors(g)) out.push_back(from_divisor(g, b.divisor));
    return out;
  });
  m.def("picard_order", [](const RibbonGraph& g) { return PicardGroup(g).order(); });
  m.def("laplacian_minor_determinant", &laplacian_minor_determinant);
  m.def("q_reduce", [](const RibbonGraph& g, const Chips& d, const std::string& q) {
    return from_divisor(g, q_reduce(g, to_divisor(g, d), g.vertex(q)));
  }, py::arg("graph"), py::arg("divisor"), py::arg("q"));
  m.def("are_equivalent", [](const RibbonGraph& g, const Chips& a, const Chips& b) {
    return are_equivalent(g, to_divisor(g, a), to_divisor(g, b));
  });

  m.def("tour", [](const RibbonGraph& g, const std::string& v, const std::string& e, const EdgeIds& t) {
    const Tour tour = bernardi_tour(g, g.vertex(v), g.edge(e), to_tree(g, t));
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& s : tour.steps)
      out.emplace_back(g.vertex_id(s.at), g.edge_id(s.edge), s.kind == StepKind::kWalk ? "walk" : "cut");
    return out;
  }, py::arg("graph"), py::arg("vertex"), py::arg("edge"), py::arg("tree"));
  m.def("beta", [](const RibbonGraph& g, const std::string& v, const std::string& e, const EdgeIds& t) {
    return from_divisor(g, bernardi_beta(g, g.vertex(v), g.edge(e), to_tree(g, t)).divisor);
  }, py::arg("graph"), py::arg("vertex"), py::arg("edge"), py::arg("tree"));
  m.def("alpha_right", [](const RibbonGraph& g, const std::string& v, const std::string& e, const Chips& d) {
    return from_tree(g, alpha_right(g, g.vertex(v), g.edge(e), to_divisor(g, d)));
  }, py::arg("graph"), py::arg("vertex"), py::arg("edge"), py::arg("divisor"));
  m.def("alpha_left", [](const RibbonGraph& g, const std::string& v, const std::string& e, const Chips& d) {
    return from_tree(g, alpha_left(g, g.vertex(v), g.edge(e), to_divisor(g, d)));
  }, py::arg("graph"), py::arg("vertex"), py::arg("edge"), py::arg("divisor"));

  m.def("act_bernardi", [](const RibbonGraph& g, const std::string& v, const Chips& c, const EdgeIds& t) {
    return from_tree(g, bernardi_act(g, g.vertex(v), to_class(g, c), to_tree(g, t)));
  }, py::arg("graph"), py::arg("vertex"), py::arg("divisor_class"), py::arg("tree"));
  m.def("act_rotor", [](const RibbonGraph& g, const std::string& v, const Chips& c, const EdgeIds& t) {
    return from_tree(g, rotor_act(g, g.vertex(v), to_class(g, c), to_tree(g, t)));
  }, py::arg("graph"), py::arg("vertex"), py::arg("divisor_class"), py::arg("tree"));
  m.def("rotor_move", [](const RibbonGraph& g, const EdgeIds& t, const std::string& x, const std::string& y) {
    return from_tree(g, rotor_move(g, to_tree(g, t), g.vertex(x), g.vertex(y)));
  }, py::arg("graph"), py::arg("tree"), py::arg("source"), py::arg("sink"));

  m.def("dual", [](const RibbonGraph& g, bool mirror) {
    const DualCorrespondence corr =
        dual_graph(g, mirror ? DualConvention::mirror() : DualConvention::standard());
    std::map<std::string, std::string> edge_map;
    for (Edge e = 0; e < g.num_edges(); ++e) edge_map[g.edge_id(e)] = corr.dual.edge_id(corr.edge_map[e]);
    return std::make_pair(corr.dual, edge_map);
  }, py::arg("graph"), py::arg("mirror") = false);
  m.def("dual_class", [](const RibbonGraph& g, const Chips& c) {
    const DualCorrespondence corr = dual_graph(g);
    return from_divisor(corr.dual, psi_class(corr, to_class(g, c)).reduced);
  }, py::arg("graph"), py::arg("divisor_class"));
  m.def("check_square", [](const RibbonGraph& g, bool mirror) {
    const auto ctx = GraphContext::make(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const DualitySquare square(ctx, v, mirror ? DualConvention::mirror() : DualConvention::standard());
      for (int c = 0; c < ctx->picard().order(); ++c)
        for (int t = 0; t < static_cast<int>(ctx->trees().size()); ++t)
          if (!square.commutes(c, t)) return false;
    }
    return true;
  }, py::arg("graph"), py::arg("mirror") = false);

  m.def("compare_vertices", [](const RibbonGraph& g, const std::string& v, const std::string& w) {
    const auto ctx = GraphContext::make(g);
    return comparison(*ctx, compare_bernardi_vertices(ctx, g.vertex(v), g.vertex(w)));
  }, py::arg("graph"), py::arg("vertex"), py::arg("other"));
  m.def("compare_torsors", [](const RibbonGraph& g, const std::string& v) {
    const auto ctx = GraphContext::make(g);
    return comparison(*ctx, compare_torsors(ctx, g.vertex(v)));
  }, py::arg("graph"), py::arg("vertex"));

  m.def("search", [](const RibbonGraph& g) {
    py::gil_scoped_release release;
    const SearchReport report = search_conjecture(g);
    return search_report_json(g, report);
  }, py::arg("graph"), "Line-oriented JSON verdicts for every rotation system.");
  m.def("suite", [](const std::vector<std::pair<std::string, RibbonGraph>>& graphs, int jobs,
                    bool mirror, std::uint64_t seed) {
    std::vector<CorpusEntry> corpus;
    for (const auto& [name, g] : graphs) corpus.push_back({name, g});
    SuiteOptions options;
    options.jobs = jobs;
    options.seed = seed;
    options.dual = mirror ? DualConvention::mirror() : DualConvention::standard();
    py::gil_scoped_release release;
    return run_theorem_suite(corpus, options).to_json_lines();
  }, py::arg("graphs"), py::arg("jobs") = 1, py::arg("mirror") = false, py::arg("seed") = 7);
}
