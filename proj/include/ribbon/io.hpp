#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ribbon/bernardi.hpp"
#include "ribbon/divisor.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/graph.hpp"
#include "ribbon/rotor.hpp"

namespace ribbon {

/// Reads the JSON graph format:
///   {"vertices": [...], "edges": [{"id": .., "ends": [.., ..]}, ...],
///    "rotation": {vertex: [edge ids in cyclic order], ...}}
/// Throws ParseError for malformed text, ValidationError for invalid graphs.
RibbonGraph parse_ribbon_graph(std::string_view text);
RibbonGraph read_ribbon_graph(const std::string& path);

/// Inverse of parse_ribbon_graph; vertices, edges and rotation lists keep
/// file order.
std::string serialize_ribbon_graph(const RibbonGraph& g);

/// JSON object vertex id -> integer; omitted vertices are 0.
/// Throws ParseError, or MissingVertex for unknown ids.
Divisor parse_divisor(const RibbonGraph& g, std::string_view text);
std::string serialize_divisor(const RibbonGraph& g, const Divisor& d);

/// Comma-separated edge ids, e.g. "a,b".
SpanningTree parse_tree(const RibbonGraph& g, std::string_view text);
std::string format_tree(const RibbonGraph& g, const SpanningTree& t);

/// Comma-separated darts "tail:edge", e.g. "u:p,v:q".
std::vector<Dart> parse_darts(const RibbonGraph& g, std::string_view text);
std::string format_darts(const RibbonGraph& g, const std::vector<Dart>& darts);

/// One line per step "<vertex> <edge> walk|cut", then "eta" and one line
/// "<edge> <vertex>" per non-tree edge.
std::string format_tour(const RibbonGraph& g, const Tour& tour);

/// One line per step "<chip> <rotor-before> <rotor-after> <next>".
std::string format_rotor_trace(const RibbonGraph& g, const std::vector<RotorTraceStep>& trace);

/// Edge map sidecar: one line "<edge> <dual edge>".
std::string format_edge_map(const DualCorrespondence& corr);

/// Annotated DOT drawings: tree edges bold, tour step numbers as labels.
std::string tour_to_dot(const RibbonGraph& g, const SpanningTree& t, const Tour& tour);
std::string rotor_trace_to_dot(const RibbonGraph& g, const SpanningTree& before,
                               const SpanningTree& after,
                               const std::vector<RotorTraceStep>& trace);

}  // namespace ribbon
