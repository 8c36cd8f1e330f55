#include "ribbon/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ribbon/error.hpp"

namespace ribbon {

using nlohmann::json;

namespace {

constexpr std::int64_t kMaxCoefficient = 1'000'000;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const json& value, const char* what) {
  if (!value.is_string()) throw ParseError(std::string(what) + " must be a string");
  return value.get<std::string>();
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

RibbonGraph parse_ribbon_graph(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("graph file must be a JSON object");
  const json& vertices = field(doc, "vertices");
  const json& edges = field(doc, "edges");
  const json& rotation = field(doc, "rotation");
  if (!vertices.is_array()) throw ParseError("'vertices' must be an array");
  if (!edges.is_array()) throw ParseError("'edges' must be an array");
  if (!rotation.is_object()) throw ParseError("'rotation' must be an object");

  std::vector<std::string> vertex_ids;
  std::map<std::string, Vertex> vertex_index;
  for (const auto& v : vertices) {
    vertex_ids.push_back(as_string(v, "vertex id"));
    if (!vertex_index.emplace(vertex_ids.back(), vertex_ids.size() - 1).second)
      throw ValidationError(ValidationKind::kDuplicateId, "vertex '" + vertex_ids.back() + "'");
  }
  auto lookup_vertex = [&](const std::string& id) {
    auto it = vertex_index.find(id);
    if (it == vertex_index.end())
      throw ValidationError(ValidationKind::kRotationMismatch, "unknown vertex '" + id + "'");
    return it->second;
  };

  std::vector<std::string> edge_ids;
  std::vector<EdgeEnds> ends;
  std::map<std::string, Edge> edge_index;
  for (const auto& e : edges) {
    if (!e.is_object()) throw ParseError("each edge must be an object");
    edge_ids.push_back(as_string(field(e, "id"), "edge id"));
    if (!edge_index.emplace(edge_ids.back(), edge_ids.size() - 1).second)
      throw ValidationError(ValidationKind::kDuplicateId, "edge '" + edge_ids.back() + "'");
    const json& pair = field(e, "ends");
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("edge '" + edge_ids.back() + "' needs exactly two ends");
    ends.push_back({lookup_vertex(as_string(pair[0], "edge end")),
                    lookup_vertex(as_string(pair[1], "edge end"))});
  }

  std::vector<std::vector<Edge>> cyclic(vertex_ids.size());
  for (const auto& [key, list] : rotation.items()) {
    const Vertex v = lookup_vertex(key);
    if (!list.is_array()) throw ParseError("rotation of '" + key + "' must be an array");
    for (const auto& id : list) {
      const std::string name = as_string(id, "rotation entry");
      auto it = edge_index.find(name);
      if (it == edge_index.end())
        throw ValidationError(ValidationKind::kRotationMismatch,
                              "unknown edge '" + name + "' at '" + key + "'");
      cyclic[v].push_back(it->second);
    }
  }
  return RibbonGraph(std::move(vertex_ids), std::move(edge_ids), std::move(ends),
                     std::move(cyclic));
}

RibbonGraph read_ribbon_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_ribbon_graph(buffer.str());
}

std::string serialize_ribbon_graph(const RibbonGraph& g) {
  std::ostringstream out;
  out << "{\n  \"vertices\": [";
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << (v ? ", " : "") << quoted(g.vertex_id(v));
  out << "],\n  \"edges\": [\n";
  for (Edge e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.ends(e);
    out << "    {\"id\": " << quoted(g.edge_id(e)) << ", \"ends\": [" << quoted(g.vertex_id(a))
        << ", " << quoted(g.vertex_id(b)) << "]}" << (e + 1 < g.num_edges() ? "," : "") << "\n";
  }
  out << "  ],\n  \"rotation\": {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "    " << quoted(g.vertex_id(v)) << ": [";
    bool first = true;
    for (Edge e : g.rotation(v)) {
      out << (first ? "" : ", ") << quoted(g.edge_id(e));
      first = false;
    }
    out << "]" << (v + 1 < g.num_vertices() ? "," : "") << "\n";
  }
  out << "  }\n}\n";
  return out.str();
}

Divisor parse_divisor(const RibbonGraph& g, std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("divisor must be a JSON object");
  Divisor d(g.num_vertices());
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number_integer()) throw ParseError("coefficient of '" + key + "' must be an integer");
    const auto coefficient = value.get<std::int64_t>();
    if (coefficient > kMaxCoefficient || coefficient < -kMaxCoefficient)
      throw ParseError("coefficient of '" + key + "' exceeds 10^6 in absolute value");
    d[g.vertex(key)] = coefficient;
  }
  return d;
}

std::string serialize_divisor(const RibbonGraph& g, const Divisor& d) {
  std::ostringstream out;
  out << "{";
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    out << (v ? ", " : "") << quoted(g.vertex_id(v)) << ": " << d[v];
  out << "}";
  return out.str();
}

SpanningTree parse_tree(const RibbonGraph& g, std::string_view text) {
  std::vector<Edge> edges;
  if (!text.empty())
    for (const auto& id : split(text, ',')) edges.push_back(g.edge(id));
  std::sort(edges.begin(), edges.end());
  return SpanningTree(g, std::move(edges));
}

std::string format_tree(const RibbonGraph& g, const SpanningTree& t) {
  std::string out;
  for (Edge e : t.edges()) out += (out.empty() ? "" : ",") + g.edge_id(e);
  return out;
}

std::vector<Dart> parse_darts(const RibbonGraph& g, std::string_view text) {
  std::vector<Dart> out;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("dart '" + item + "' must be tail:edge");
    const Vertex tail = g.vertex(item.substr(0, colon));
    const Edge e = g.edge(item.substr(colon + 1));
    out.push_back(g.dart(e, tail));
  }
  return out;
}

std::string format_darts(const RibbonGraph& g, const std::vector<Dart>& darts) {
  std::string out;
  for (Dart d : darts)
    out += (out.empty() ? "" : ",") + g.vertex_id(g.tail(d)) + ":" + g.edge_id(g.dart_edge(d));
  return out;
}

std::string format_tour(const RibbonGraph& g, const Tour& tour) {
  std::ostringstream out;
  for (const auto& step : tour.steps)
    out << g.vertex_id(step.at) << ' ' << g.edge_id(step.edge) << ' '
        << (step.kind == StepKind::kWalk ? "walk" : "cut") << '\n';
  out << "eta\n";
  for (Edge e = 0; e < g.num_edges(); ++e)
    if (tour.eta[e] >= 0) out << g.edge_id(e) << ' ' << g.vertex_id(tour.eta[e]) << '\n';
  return out.str();
}

std::string format_rotor_trace(const RibbonGraph& g, const std::vector<RotorTraceStep>& trace) {
  std::ostringstream out;
  for (const auto& step : trace)
    out << g.vertex_id(step.chip) << ' ' << g.edge_id(step.before) << ' ' << g.edge_id(step.after)
        << ' ' << g.vertex_id(step.next) << '\n';
  return out.str();
}

std::string format_edge_map(const DualCorrespondence& corr) {
  std::ostringstream out;
  for (Edge e = 0; e < corr.primal.num_edges(); ++e)
    out << corr.primal.edge_id(e) << ' ' << corr.dual.edge_id(corr.edge_map[e]) << '\n';
  return out.str();
}

std::string tour_to_dot(const RibbonGraph& g, const SpanningTree& t, const Tour& tour) {
  std::vector<std::string> labels(g.num_edges());
  for (std::size_t i = 0; i < tour.steps.size(); ++i) {
    const auto& step = tour.steps[i];
    std::string& label = labels[step.edge];
    label += (label.empty() ? "" : " ") + std::to_string(i + 1) +
             (step.kind == StepKind::kWalk ? "w" : "c") + "@" + g.vertex_id(step.at);
  }
  std::ostringstream out;
  out << "graph tour {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << quoted(g.vertex_id(v));
    if (v == tour.start_vertex) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (Edge e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.ends(e);
    out << "  " << quoted(g.vertex_id(a)) << " -- " << quoted(g.vertex_id(b)) << " [label="
        << quoted(g.edge_id(e) + ": " + labels[e]);
    if (t.contains(e)) out << ", penwidth=3";
    else out << ", style=dashed, taillabel=" << quoted(tour.eta[e] == a ? "*" : "")
             << ", headlabel=" << quoted(tour.eta[e] == b ? "*" : "");
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string rotor_trace_to_dot(const RibbonGraph& g, const SpanningTree& before,
                               const SpanningTree& after,
                               const std::vector<RotorTraceStep>& trace) {
  std::vector<std::string> labels(g.num_edges());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    std::string& label = labels[trace[i].after];
    label += (label.empty() ? "" : " ") + std::to_string(i + 1);
  }
  std::ostringstream out;
  out << "graph rotor {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  " << quoted(g.vertex_id(v)) << ";\n";
  for (Edge e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.ends(e);
    out << "  " << quoted(g.vertex_id(a)) << " -- " << quoted(g.vertex_id(b))
        << " [label=" << quoted(g.edge_id(e) + (labels[e].empty() ? "" : ": " + labels[e]));
    if (after.contains(e)) out << ", penwidth=3";
    if (before.contains(e) && !after.contains(e)) out << ", style=dotted";
    else if (!after.contains(e)) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ribbon
