#include "ribbon/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "ribbon/error.hpp"

namespace ribbon {

const char* to_string(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::kLoop:
      return "loop";
    case ValidationKind::kDisconnected:
      return "disconnected";
    case ValidationKind::kRotationMismatch:
      return "rotation-mismatch";
    case ValidationKind::kDuplicateId:
      return "duplicate-id";
  }
  return "unknown";
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

bool connected_with(int n, const std::vector<EdgeEnds>& ends, const std::vector<bool>* keep) {
  if (n <= 1) return true;
  DisjointSets sets(n);
  int components = n;
  for (std::size_t e = 0; e < ends.size(); ++e) {
    if (keep && !(*keep)[e]) continue;
    if (sets.unite(ends[e].first, ends[e].second)) --components;
  }
  return components == 1;
}

}  // namespace

RibbonGraph::RibbonGraph(std::vector<std::string> vertex_ids, std::vector<std::string> edge_ids,
                         std::vector<EdgeEnds> ends, std::vector<std::vector<Edge>> rotation)
    : vertex_ids_(std::move(vertex_ids)),
      edge_ids_(std::move(edge_ids)),
      ends_(std::move(ends)),
      rotation_(std::move(rotation)) {
  const int n = num_vertices();
  const int m = num_edges();
  if (n == 0) throw ValidationError(ValidationKind::kDisconnected, "graph has no vertices");
  if (static_cast<int>(ends_.size()) != m)
    throw ValidationError(ValidationKind::kRotationMismatch, "edge id and endpoint counts differ");

  for (Vertex v = 0; v < n; ++v) {
    if (!vertex_index_.emplace(vertex_ids_[v], v).second)
      throw ValidationError(ValidationKind::kDuplicateId, "vertex '" + vertex_ids_[v] + "'");
  }
  for (Edge e = 0; e < m; ++e) {
    if (!edge_index_.emplace(edge_ids_[e], e).second)
      throw ValidationError(ValidationKind::kDuplicateId, "edge '" + edge_ids_[e] + "'");
  }

  std::vector<std::vector<Edge>> incident(n);
  for (Edge e = 0; e < m; ++e) {
    const auto [a, b] = ends_[e];
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ValidationError(ValidationKind::kRotationMismatch,
                            "edge '" + edge_ids_[e] + "' has an endpoint out of range");
    if (a == b) throw ValidationError(ValidationKind::kLoop, "edge '" + edge_ids_[e] + "'");
    incident[a].push_back(e);
    incident[b].push_back(e);
  }

  if (static_cast<int>(rotation_.size()) != n)
    throw ValidationError(ValidationKind::kRotationMismatch, "one rotation per vertex required");
  position_.assign(2 * m, -1);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Edge> listed = rotation_[v];
    std::sort(listed.begin(), listed.end());
    if (listed != incident[v])
      throw ValidationError(ValidationKind::kRotationMismatch,
                            "rotation at '" + vertex_ids_[v] +
                                "' is not a permutation of its incident edges");
    for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i)
      position_[dart(rotation_[v][i], v)] = i;
  }

  if (!connected_with(n, ends_, nullptr))
    throw ValidationError(ValidationKind::kDisconnected, "underlying graph is not connected");
}

std::optional<Vertex> RibbonGraph::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Edge> RibbonGraph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

Vertex RibbonGraph::vertex(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw MissingVertex("unknown vertex '" + std::string(id) + "'");
}

Edge RibbonGraph::edge(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw MissingEdge("unknown edge '" + std::string(id) + "'");
}

bool RibbonGraph::incident(Edge e, Vertex v) const {
  return ends_.at(e).first == v || ends_.at(e).second == v;
}

Vertex RibbonGraph::other_end(Edge e, Vertex v) const {
  const auto [a, b] = ends_.at(e);
  if (a == v) return b;
  if (b == v) return a;
  throw NotIncident("edge '" + edge_ids_[e] + "' is not incident to '" + vertex_ids_.at(v) + "'");
}

Dart RibbonGraph::dart(Edge e, Vertex tail) const {
  const auto [a, b] = ends_.at(e);
  if (a == tail) return 2 * e;
  if (b == tail) return 2 * e + 1;
  throw NotIncident("edge '" + edge_ids_[e] + "' is not incident to '" + vertex_ids_.at(tail) +
                    "'");
}

int RibbonGraph::rotation_position(Vertex v, Edge e) const { return position_[dart(e, v)]; }

Edge RibbonGraph::rotation_next(Vertex v, Edge e) const {
  const auto& rot = rotation_[v];
  return rot[(rotation_position(v, e) + 1) % rot.size()];
}

Edge RibbonGraph::rotation_prev(Vertex v, Edge e) const {
  const auto& rot = rotation_[v];
  return rot[(rotation_position(v, e) + rot.size() - 1) % rot.size()];
}

Dart RibbonGraph::face_next(Dart d) const {
  const Vertex w = head(d);
  return dart(rotation_next(w, dart_edge(d)), w);
}

int RibbonGraph::multiplicity(Vertex u, Vertex w) const {
  int count = 0;
  for (Edge e : rotation_.at(u))
    if (other_end(e, u) == w) ++count;
  return count;
}

bool RibbonGraph::is_simple() const {
  for (Vertex v = 0; v < num_vertices(); ++v) {
    std::vector<Vertex> nbrs;
    for (Edge e : rotation_[v]) nbrs.push_back(other_end(e, v));
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) return false;
  }
  return true;
}

RibbonGraph RibbonGraph::subgraph(const std::vector<bool>& keep) const {
  std::vector<Edge> renumber(num_edges(), -1);
  std::vector<std::string> ids;
  std::vector<EdgeEnds> ends;
  for (Edge e = 0; e < num_edges(); ++e) {
    if (!keep.at(e)) continue;
    renumber[e] = static_cast<Edge>(ids.size());
    ids.push_back(edge_ids_[e]);
    ends.push_back(ends_[e]);
  }
  std::vector<std::vector<Edge>> rotation(num_vertices());
  for (Vertex v = 0; v < num_vertices(); ++v)
    for (Edge e : rotation_[v])
      if (keep[e]) rotation[v].push_back(renumber[e]);
  return RibbonGraph(vertex_ids_, std::move(ids), std::move(ends), std::move(rotation));
}

RibbonGraph RibbonGraph::with_rotation(std::vector<std::vector<Edge>> rotation) const {
  return RibbonGraph(vertex_ids_, edge_ids_, ends_, std::move(rotation));
}

RibbonGraph RibbonGraph::mirrored() const {
  auto rotation = rotation_;
  for (auto& rot : rotation) std::reverse(rot.begin(), rot.end());
  return with_rotation(std::move(rotation));
}

bool is_connected(const RibbonGraph& g, const std::vector<bool>& keep) {
  std::vector<EdgeEnds> ends;
  for (Edge e = 0; e < g.num_edges(); ++e) ends.push_back(g.ends(e));
  return connected_with(g.num_vertices(), ends, &keep);
}

bool is_spanning_tree(const RibbonGraph& g, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) != g.num_vertices() - 1) return false;
  DisjointSets sets(g.num_vertices());
  for (Edge e : edges) {
    if (e < 0 || e >= g.num_edges()) return false;
    if (!sets.unite(g.ends(e).first, g.ends(e).second)) return false;
  }
  return true;
}

SpanningTree::SpanningTree(const RibbonGraph& g, std::vector<Edge> edges)
    : edges_(std::move(edges)), member_(g.num_edges(), false) {
  std::sort(edges_.begin(), edges_.end());
  if (!is_spanning_tree(g, edges_)) throw NotASpanningTree("edge set is not a spanning tree");
  for (Edge e : edges_) member_[e] = true;
}

namespace {

void enumerate_trees(const RibbonGraph& g, Edge next, std::vector<Edge>& chosen,
                     const DisjointSets& sets, std::vector<SpanningTree>& out) {
  const int need = g.num_vertices() - 1 - static_cast<int>(chosen.size());
  if (need == 0) {
    out.emplace_back(g, chosen);
    return;
  }
  if (g.num_edges() - next < need) return;
  const auto [a, b] = g.ends(next);
  DisjointSets with = sets;
  if (with.unite(a, b)) {
    chosen.push_back(next);
    enumerate_trees(g, next + 1, chosen, with, out);
    chosen.pop_back();
  }
  enumerate_trees(g, next + 1, chosen, sets, out);
}

}  // namespace

std::vector<SpanningTree> spanning_trees(const RibbonGraph& g) {
  std::vector<SpanningTree> out;
  std::vector<Edge> chosen;
  enumerate_trees(g, 0, chosen, DisjointSets(g.num_vertices()), out);
  return out;
}

TreeIndex::TreeIndex(const std::vector<SpanningTree>& trees) {
  for (int i = 0; i < static_cast<int>(trees.size()); ++i) sorted_.emplace_back(trees[i].edges(), i);
  std::sort(sorted_.begin(), sorted_.end());
}

int TreeIndex::find(const SpanningTree& t) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), t.edges(),
                             [](const auto& entry, const auto& key) { return entry.first < key; });
  if (it == sorted_.end() || it->first != t.edges()) return -1;
  return it->second;
}

int TreeIndex::at(const SpanningTree& t) const {
  const int i = find(t);
  if (i < 0) throw NotASpanningTree("tree not present in index");
  return i;
}

std::vector<Dart> tree_path(const RibbonGraph& g, const SpanningTree& t, Vertex from, Vertex to) {
  std::vector<Dart> via(g.num_vertices(), -1);
  std::vector<bool> seen(g.num_vertices(), false);
  std::queue<Vertex> frontier;
  frontier.push(from);
  seen[from] = true;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Edge e : g.rotation(u)) {
      if (!t.contains(e)) continue;
      const Vertex w = g.other_end(e, u);
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = g.dart(e, u);
      frontier.push(w);
    }
  }
  std::vector<Dart> path;
  for (Vertex x = to; x != from; x = g.tail(via[x])) path.push_back(via[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Dart> fundamental_cycle(const RibbonGraph& g, const SpanningTree& t, Edge e,
                                    std::optional<Vertex> tail) {
  if (t.contains(e)) throw EdgeInTree("edge '" + g.edge_id(e) + "' belongs to the tree");
  const Vertex start = tail.value_or(g.ends(e).first);
  const Dart first = g.dart(e, start);
  std::vector<Dart> cycle{first};
  for (Dart d : tree_path(g, t, g.head(first), start)) cycle.push_back(d);
  return cycle;
}

FaceDecomposition trace_faces(const RibbonGraph& g) {
  FaceDecomposition result;
  result.face_of.assign(g.num_darts(), -1);
  for (Dart start = 0; start < g.num_darts(); ++start) {
    if (result.face_of[start] >= 0) continue;
    const int index = static_cast<int>(result.faces.size());
    std::vector<Dart> face;
    Dart d = start;
    do {
      result.face_of[d] = index;
      face.push_back(d);
      d = g.face_next(d);
    } while (d != start);
    result.faces.push_back(std::move(face));
  }
  // An edgeless graph is a point on the sphere.
  const int faces = g.num_edges() == 0 ? 1 : static_cast<int>(result.faces.size());
  const int euler = g.num_vertices() - g.num_edges() + faces;
  result.topological_genus = (2 - euler) / 2;
  return result;
}

std::vector<Edge> bridges(const RibbonGraph& g) {
  std::vector<Edge> out;
  std::vector<bool> keep(g.num_edges(), true);
  for (Edge e = 0; e < g.num_edges(); ++e) {
    keep[e] = false;
    if (!is_connected(g, keep)) out.push_back(e);
    keep[e] = true;
  }
  return out;
}

std::int64_t laplacian_minor_determinant(const RibbonGraph& g) {
  const int n = g.num_vertices() - 1;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination on the reduced Laplacian (vertex 0 removed).
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n, 0));
  for (Edge e = 0; e < g.num_edges(); ++e) {
    const int u = g.ends(e).first - 1;
    const int w = g.ends(e).second - 1;
    if (u >= 0) a[u][u] += 1;
    if (w >= 0) a[w][w] += 1;
    if (u >= 0 && w >= 0) {
      a[u][w] -= 1;
      a[w][u] -= 1;
    }
  }
  __int128 previous = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
    previous = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

bool are_isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  if (a.num_edges() == 0) return true;
  auto degrees = [](const RibbonGraph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.num_vertices(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;

  auto spin = [](const RibbonGraph& g, Dart d) {
    const Vertex t = g.tail(d);
    return g.dart(g.rotation_next(t, g.dart_edge(d)), t);
  };

  // A dart map commuting with reversal and rotation is fixed by one image.
  for (Dart target = 0; target < b.num_darts(); ++target) {
    std::vector<Dart> image(a.num_darts(), -1);
    std::vector<bool> used(b.num_darts(), false);
    std::vector<Dart> stack{0};
    image[0] = target;
    used[target] = true;
    bool ok = true;
    while (ok && !stack.empty()) {
      const Dart d = stack.back();
      stack.pop_back();
      const std::pair<Dart, Dart> moves[] = {{RibbonGraph::reverse(d), RibbonGraph::reverse(image[d])},
                                             {spin(a, d), spin(b, image[d])}};
      for (const auto& [from, to] : moves) {
        if (image[from] == -1) {
          if (used[to]) {
            ok = false;
            break;
          }
          image[from] = to;
          used[to] = true;
          stack.push_back(from);
        } else if (image[from] != to) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace ribbon
