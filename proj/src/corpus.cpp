#include "ribbon/corpus.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ribbon {

RibbonGraph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& ends,
                       const std::vector<std::vector<Edge>>& rotation,
                       std::vector<std::string> edge_names) {
  std::vector<std::string> vertex_ids;
  for (int v = 0; v < num_vertices; ++v) vertex_ids.push_back(std::to_string(v + 1));
  if (edge_names.empty())
    for (std::size_t e = 0; e < ends.size(); ++e) edge_names.push_back("e" + std::to_string(e + 1));
  std::vector<EdgeEnds> pairs;
  for (const auto& [a, b] : ends) pairs.push_back({a, b});
  return RibbonGraph(std::move(vertex_ids), std::move(edge_names), std::move(pairs), rotation);
}

std::vector<std::vector<Edge>> file_order_rotation(int num_vertices,
                                                   const std::vector<std::pair<int, int>>& ends) {
  std::vector<std::vector<Edge>> rotation(num_vertices);
  for (Edge e = 0; e < static_cast<Edge>(ends.size()); ++e) {
    rotation[ends[e].first].push_back(e);
    rotation[ends[e].second].push_back(e);
  }
  return rotation;
}

RibbonGraph single_edge_graph() { return RibbonGraph({"u", "v"}, {"e1"}, {{0, 1}}, {{0}, {0}}); }

RibbonGraph path_graph(int num_vertices) {
  std::vector<std::pair<int, int>> ends;
  for (int v = 0; v + 1 < num_vertices; ++v) ends.emplace_back(v, v + 1);
  return make_graph(num_vertices, ends, file_order_rotation(num_vertices, ends));
}

RibbonGraph triangle_graph() {
  return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}, {{0, 2}, {1, 0}, {2, 1}}, {"a", "b", "c"});
}

RibbonGraph theta_graph() {
  return RibbonGraph({"u", "v"}, {"p", "q", "r"}, {{0, 1}, {0, 1}, {0, 1}}, {{0, 1, 2}, {2, 1, 0}});
}

RibbonGraph banana_graph(int edges) {
  std::vector<std::string> names;
  std::vector<EdgeEnds> ends;
  std::vector<std::vector<Edge>> rotation(2);
  for (int e = 0; e < edges; ++e) {
    names.push_back(std::string(1, static_cast<char>('a' + e)));
    ends.push_back({0, 1});
    rotation[0].push_back(e);
    rotation[1].insert(rotation[1].begin(), e);
  }
  return RibbonGraph({"u", "v"}, std::move(names), std::move(ends), std::move(rotation));
}

RibbonGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> ends;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ends.emplace_back(i, j);
      names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  return make_graph(n, ends, file_order_rotation(n, ends), std::move(names));
}

RibbonGraph complete_bipartite_graph(int a, int b) {
  std::vector<std::pair<int, int>> ends;
  std::vector<std::string> names;
  for (int i = 0; i < a; ++i)
    for (int j = a; j < a + b; ++j) {
      ends.emplace_back(i, j);
      names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  return make_graph(a + b, ends, file_order_rotation(a + b, ends), std::move(names));
}

std::int64_t rotation_system_count(const RibbonGraph& g) {
  std::int64_t count = 1;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (int k = 2; k < g.degree(v); ++k) count *= k;
  return count;
}

void for_each_rotation_system(const RibbonGraph& g,
                              const std::function<bool(RibbonGraph)>& visit) {
  const int n = g.num_vertices();
  std::vector<std::vector<Edge>> current(n);
  auto recurse = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return visit(g.with_rotation(current));
    const auto rot = g.rotation(v);
    if (rot.empty()) {
      current[v].clear();
      return self(self, v + 1);
    }
    std::vector<Edge> rest(rot.begin() + 1, rot.end());
    std::sort(rest.begin(), rest.end());
    do {
      current[v].assign(1, rot.front());
      current[v].insert(current[v].end(), rest.begin(), rest.end());
      if (!self(self, v + 1)) return false;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return true;
  };
  recurse(recurse, 0);
}

std::vector<RibbonGraph> rotation_systems(const RibbonGraph& g) {
  std::vector<RibbonGraph> out;
  for_each_rotation_system(g, [&out](RibbonGraph h) {
    out.push_back(std::move(h));
    return true;
  });
  return out;
}

namespace {

struct PlaneMap {
  std::vector<std::pair<int, int>> ends;
  std::vector<std::vector<Edge>> rotation;

  RibbonGraph graph() const {
    return make_graph(static_cast<int>(rotation.size()), ends, rotation);
  }

  void insert_after(Vertex v, Edge after, Edge e) {
    auto& rot = rotation[v];
    rot.insert(std::find(rot.begin(), rot.end(), after) + 1, e);
  }
};

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

RibbonGraph random_plane_map(std::mt19937_64& rng, const RandomGraphOptions& options) {
  PlaneMap map;
  const int cycle = 2 + static_cast<int>(pick(rng, std::min(3, options.max_vertices - 1)));
  map.rotation.resize(cycle);
  for (int i = 0; i < cycle; ++i) {
    map.ends.emplace_back(i, (i + 1) % cycle);
    map.rotation[i].push_back(i);
    map.rotation[(i + 1) % cycle].push_back(i);
  }
  const int target =
      cycle + 1 + static_cast<int>(pick(rng, std::max(1, options.max_edges - cycle)));
  for (int attempt = 0; attempt < 200 && static_cast<int>(map.ends.size()) < target; ++attempt) {
    const Edge fresh = static_cast<Edge>(map.ends.size());
    const Vertex added = static_cast<Vertex>(map.rotation.size());
    const bool room = added < options.max_vertices;
    switch (pick(rng, 3)) {
      case 0: {  // subdivide an edge
        if (!room) break;
        const Edge e = static_cast<Edge>(pick(rng, map.ends.size()));
        const auto [a, b] = map.ends[e];
        map.ends[e] = {a, added};
        map.ends.emplace_back(added, b);
        std::replace(map.rotation[b].begin(), map.rotation[b].end(), e, fresh);
        map.rotation.push_back({e, fresh});
        break;
      }
      case 1: {  // pendant vertex in a corner
        if (!room || !options.allow_bridges) break;
        const Vertex v = static_cast<Vertex>(pick(rng, added));
        const Edge after = map.rotation[v][pick(rng, map.rotation[v].size())];
        map.ends.emplace_back(v, added);
        map.insert_after(v, after, fresh);
        map.rotation.push_back({fresh});
        break;
      }
      default: {  // chord inside a face
        const RibbonGraph g = map.graph();
        const FaceDecomposition faces = trace_faces(g);
        const auto& face = faces.faces[pick(rng, faces.faces.size())];
        const Dart first = face[pick(rng, face.size())];
        std::vector<Dart> partners;
        for (Dart d : face)
          if (g.head(d) != g.head(first)) partners.push_back(d);
        if (partners.empty()) break;
        const Dart second = partners[pick(rng, partners.size())];
        map.ends.emplace_back(g.head(first), g.head(second));
        map.insert_after(g.head(first), g.dart_edge(first), fresh);
        map.insert_after(g.head(second), g.dart_edge(second), fresh);
        break;
      }
    }
  }
  RibbonGraph g = map.graph();
  if (!trace_faces(g).is_planar()) throw std::logic_error("plane map growth left the sphere");
  return g;
}

RibbonGraph random_multigraph(std::mt19937_64& rng, const RandomGraphOptions& options) {
  const int n = 3 + static_cast<int>(pick(rng, std::max(1, options.max_vertices - 2)));
  const int m = n + static_cast<int>(pick(rng, std::max(1, options.max_edges - n + 1)));
  std::vector<std::pair<int, int>> ends;
  for (int v = 1; v < n; ++v) ends.emplace_back(static_cast<int>(pick(rng, v)), v);
  while (static_cast<int>(ends.size()) < m) {
    const int a = static_cast<int>(pick(rng, n));
    const int b = static_cast<int>(pick(rng, n));
    if (a != b) ends.emplace_back(std::min(a, b), std::max(a, b));
  }
  auto rotation = file_order_rotation(n, ends);
  for (auto& rot : rotation)
    for (int i = static_cast<int>(rot.size()) - 1; i > 0; --i)
      std::swap(rot[i], rot[pick(rng, i + 1)]);
  return make_graph(n, ends, rotation);
}

}  // namespace

RibbonGraph random_ribbon_graph(std::uint64_t seed, const RandomGraphOptions& options) {
  std::mt19937_64 rng(seed);
  return options.planar ? random_plane_map(rng, options) : random_multigraph(rng, options);
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> corpus;
  corpus.push_back({"single-edge", single_edge_graph()});
  corpus.push_back({"path-3", path_graph(3)});
  corpus.push_back({"triangle", triangle_graph()});
  int index = 0;
  for (auto& g : rotation_systems(theta_graph()))
    corpus.push_back({"theta-r" + std::to_string(index++), std::move(g)});
  corpus.push_back({"banana-4", banana_graph(4)});
  index = 0;
  for (auto& g : rotation_systems(complete_graph(4))) {
    const std::string suffix = (index < 10 ? "0" : "") + std::to_string(index);
    corpus.push_back({"k4-r" + suffix, std::move(g)});
    ++index;
  }
  corpus.push_back({"k5", complete_graph(5)});
  corpus.push_back({"k33", complete_bipartite_graph(3, 3)});
  for (int i = 0; i < 5; ++i) {
    RandomGraphOptions options;
    options.planar = true;
    options.allow_bridges = i == 4;
    corpus.push_back({"random-planar-" + std::to_string(i), random_ribbon_graph(1000 + i, options)});
  }
  for (int i = 0; i < 5; ++i)
    corpus.push_back({"random-" + std::to_string(i), random_ribbon_graph(2000 + i, {})});
  return corpus;
}

}  // namespace ribbon
