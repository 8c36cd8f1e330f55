#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ribbon {

// Vertices and edges are indices in file order. A dart is an edge with a
// chosen tail: dart 2e leaves the first listed endpoint of e, dart 2e+1 the
// second.
using Vertex = int;
using Edge = int;
using Dart = int;

struct EdgeEnds {
  Vertex first;
  Vertex second;
  bool operator==(const EdgeEnds&) const = default;
};

/// A loopless connected multigraph with a cyclic edge order at each vertex.
///
/// Immutable after construction; the constructor validates every invariant
/// and throws ValidationError on violation.
class RibbonGraph {
 public:
  RibbonGraph(std::vector<std::string> vertex_ids, std::vector<std::string> edge_ids,
              std::vector<EdgeEnds> ends, std::vector<std::vector<Edge>> rotation);

  int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
  int num_edges() const { return static_cast<int>(edge_ids_.size()); }
  int num_darts() const { return 2 * num_edges(); }

  /// |E| - |V| + 1.
  int genus() const { return num_edges() - num_vertices() + 1; }

  const std::string& vertex_id(Vertex v) const { return vertex_ids_.at(v); }
  const std::string& edge_id(Edge e) const { return edge_ids_.at(e); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<std::string>& edge_ids() const { return edge_ids_; }

  std::optional<Vertex> find_vertex(std::string_view id) const;
  std::optional<Edge> find_edge(std::string_view id) const;
  /// Throws MissingVertex / MissingEdge.
  Vertex vertex(std::string_view id) const;
  Edge edge(std::string_view id) const;

  EdgeEnds ends(Edge e) const { return ends_.at(e); }
  bool incident(Edge e, Vertex v) const;
  /// The endpoint of e that is not v. Throws NotIncident.
  Vertex other_end(Edge e, Vertex v) const;

  std::span<const Edge> rotation(Vertex v) const { return rotation_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(rotation_.at(v).size()); }
  const std::vector<std::vector<Edge>>& rotations() const { return rotation_; }

  /// Cyclic successor / predecessor of e in the rotation at v.
  Edge rotation_next(Vertex v, Edge e) const;
  Edge rotation_prev(Vertex v, Edge e) const;
  /// Index of e within rotation(v).
  int rotation_position(Vertex v, Edge e) const;

  Dart dart(Edge e, Vertex tail) const;
  Edge dart_edge(Dart d) const { return d / 2; }
  Vertex tail(Dart d) const { return d % 2 == 0 ? ends_[d / 2].first : ends_[d / 2].second; }
  Vertex head(Dart d) const { return d % 2 == 0 ? ends_[d / 2].second : ends_[d / 2].first; }
  static Dart reverse(Dart d) { return d ^ 1; }

  /// Next dart on the same face: the rotation successor, at the head of d,
  /// of the reverse of d.
  Dart face_next(Dart d) const;

  /// Number of edges joining u and w.
  int multiplicity(Vertex u, Vertex w) const;
  bool is_simple() const;

  /// Same vertices, edges restricted to `keep` (indexed by edge); rotations
  /// are the induced cyclic orders. Edges are renumbered in file order.
  /// Throws ValidationError if the result is disconnected.
  RibbonGraph subgraph(const std::vector<bool>& keep) const;

  /// Same graph with each rotation replaced.
  RibbonGraph with_rotation(std::vector<std::vector<Edge>> rotation) const;

  /// Same graph with every cyclic order reversed (the mirror embedding).
  RibbonGraph mirrored() const;

  bool operator==(const RibbonGraph& other) const = default;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<EdgeEnds> ends_;
  std::vector<std::vector<Edge>> rotation_;
  // position_[d]: index of dart_edge(d) in rotation(tail(d)).
  std::vector<int> position_;
  std::unordered_map<std::string, Vertex> vertex_index_;
  std::unordered_map<std::string, Edge> edge_index_;
};

/// Connectivity of the subgraph on all vertices using edges with keep[e].
bool is_connected(const RibbonGraph& g, const std::vector<bool>& keep);

/// Edge subset of size |V|-1 that is connected and acyclic.
class SpanningTree {
 public:
  SpanningTree() = default;
  /// Throws NotASpanningTree if `edges` is not a spanning tree of g.
  SpanningTree(const RibbonGraph& g, std::vector<Edge> edges);

  bool contains(Edge e) const { return e < static_cast<int>(member_.size()) && member_[e]; }
  /// Sorted edge indices.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<bool>& mask() const { return member_; }
  int size() const { return static_cast<int>(edges_.size()); }

  auto operator<=>(const SpanningTree& other) const { return edges_ <=> other.edges_; }
  bool operator==(const SpanningTree& other) const { return edges_ == other.edges_; }

 private:
  std::vector<Edge> edges_;
  std::vector<bool> member_;
};

bool is_spanning_tree(const RibbonGraph& g, const std::vector<Edge>& edges);

/// All spanning trees, lexicographic in sorted edge-index tuples.
std::vector<SpanningTree> spanning_trees(const RibbonGraph& g);

/// Index lookup for a fixed list of trees.
class TreeIndex {
 public:
  explicit TreeIndex(const std::vector<SpanningTree>& trees);
  /// -1 if absent.
  int find(const SpanningTree& t) const;
  int at(const SpanningTree& t) const;

 private:
  std::vector<std::pair<std::vector<Edge>, int>> sorted_;
};

/// The unique simple cycle of T + e, as a dart sequence starting with the
/// dart of e leaving `tail` (the first endpoint of e when omitted).
/// Throws EdgeInTree when e is in T.
std::vector<Dart> fundamental_cycle(const RibbonGraph& g, const SpanningTree& t, Edge e,
                                    std::optional<Vertex> tail = std::nullopt);

/// Unique path of tree darts from `from` to `to`.
std::vector<Dart> tree_path(const RibbonGraph& g, const SpanningTree& t, Vertex from, Vertex to);

struct FaceDecomposition {
  std::vector<std::vector<Dart>> faces;
  /// face_of[d]: index of the face containing dart d.
  std::vector<int> face_of;
  int topological_genus = 0;

  bool is_planar() const { return topological_genus == 0; }
};

FaceDecomposition trace_faces(const RibbonGraph& g);

/// Edges whose removal disconnects the graph.
std::vector<Edge> bridges(const RibbonGraph& g);

/// Determinant of the Laplacian with the row and column of vertex 0
/// removed (the number of spanning trees).
std::int64_t laplacian_minor_determinant(const RibbonGraph& g);

/// Orientation-preserving ribbon graph isomorphism test: a bijection on
/// darts commuting with reversal and with the rotation successor.
bool are_isomorphic(const RibbonGraph& a, const RibbonGraph& b);

}  // namespace ribbon
