#include "ribbon/duality.hpp"

#include <algorithm>
#include <queue>

#include "ribbon/error.hpp"

namespace ribbon {

DualConvention DualConvention::standard() { return DualConvention{false, false}; }

DualConvention DualConvention::mirror() { return DualConvention{true, false}; }

DualCorrespondence dual_graph(const RibbonGraph& g, DualConvention convention) {
  FaceDecomposition faces = trace_faces(g);
  if (!faces.is_planar())
    throw NotPlanar("topological genus is " + std::to_string(faces.topological_genus));
  const auto bridge_list = bridges(g);
  if (!bridge_list.empty())
    throw HasBridge("edge '" + g.edge_id(bridge_list.front()) + "' is a bridge");

  const int f = static_cast<int>(faces.faces.size());
  const int m = g.num_edges();
  std::vector<std::string> vertex_ids;
  for (int i = 0; i < f; ++i) vertex_ids.push_back("f" + std::to_string(i));
  std::vector<std::string> edge_ids;
  std::vector<EdgeEnds> ends;
  for (Edge e = 0; e < m; ++e) {
    edge_ids.push_back(g.edge_id(e) + "*");
    ends.push_back(EdgeEnds{faces.face_of[2 * e + 1], faces.face_of[2 * e]});
  }
  std::vector<std::vector<Edge>> rotation(f);
  for (int i = 0; i < f; ++i) {
    for (Dart d : faces.faces[i]) rotation[i].push_back(g.dart_edge(d));
    if (convention.reverse_face_order) std::reverse(rotation[i].begin(), rotation[i].end());
  }

  std::vector<Edge> edge_map(m);
  std::vector<Dart> dart_map(2 * m);
  for (Edge e = 0; e < m; ++e) {
    edge_map[e] = e;
    dart_map[2 * e] = convention.flip_darts ? 2 * e + 1 : 2 * e;
    dart_map[2 * e + 1] = RibbonGraph::reverse(dart_map[2 * e]);
  }
  std::vector<Vertex> face_map(f);
  for (int i = 0; i < f; ++i) face_map[i] = i;

  RibbonGraph dual(std::move(vertex_ids), std::move(edge_ids), std::move(ends),
                   std::move(rotation));
  return DualCorrespondence{g,
                            std::move(dual),
                            std::move(faces),
                            std::move(edge_map),
                            std::move(dart_map),
                            std::move(face_map),
                            convention};
}

SpanningTree dual_tree(const DualCorrespondence& corr, const SpanningTree& t) {
  std::vector<Edge> edges;
  for (Edge e = 0; e < corr.primal.num_edges(); ++e)
    if (!t.contains(e)) edges.push_back(corr.edge_map[e]);
  std::sort(edges.begin(), edges.end());
  return SpanningTree(corr.dual, std::move(edges));
}

namespace {

SpanningTree depth_first_tree(const RibbonGraph& g) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Edge> edges;
  std::vector<Vertex> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Edge e : g.rotation(u)) {
      const Vertex w = g.other_end(e, u);
      if (seen[w]) continue;
      seen[w] = true;
      edges.push_back(e);
      stack.push_back(w);
    }
  }
  std::sort(edges.begin(), edges.end());
  return SpanningTree(g, std::move(edges));
}

std::vector<Dart> shortest_path(const RibbonGraph& g, Vertex from, Vertex to) {
  std::vector<Dart> via(g.num_vertices(), -1);
  std::vector<bool> seen(g.num_vertices(), false);
  std::queue<Vertex> frontier;
  frontier.push(from);
  seen[from] = true;
  while (!frontier.empty() && !seen[to]) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Edge e = 0; e < g.num_edges(); ++e) {
      if (!g.incident(e, u)) continue;
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

}  // namespace

Chain lift_to_chain(const RibbonGraph& g, const Divisor& d, ChainRouting routing) {
  if (d.degree() != 0) throw DegreeMismatch("only degree-0 divisors are boundaries");
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (std::int64_t k = 0; k < d[v]; ++k) sinks.push_back(v);
    for (std::int64_t k = 0; k < -d[v]; ++k) sources.push_back(v);
  }
  std::optional<SpanningTree> tree;
  if (routing == ChainRouting::kSearchTree) tree = depth_first_tree(g);

  Chain chain(g.num_edges(), 0);
  for (std::size_t i = 0; i < sinks.size(); ++i) {
    const auto path = tree ? tree_path(g, *tree, sources[i], sinks[i])
                           : shortest_path(g, sources[i], sinks[i]);
    for (Dart p : path) chain[g.dart_edge(p)] += p % 2 == 0 ? 1 : -1;
  }
  return chain;
}

Divisor chain_boundary(const RibbonGraph& g, const Chain& chain) {
  Divisor out(g.num_vertices());
  for (Edge e = 0; e < g.num_edges(); ++e) {
    out[g.head(2 * e)] += chain[e];
    out[g.tail(2 * e)] -= chain[e];
  }
  return out;
}

DivisorClass psi_divisor(const DualCorrespondence& corr, const Divisor& d, ChainRouting routing) {
  const Chain chain = lift_to_chain(corr.primal, d, routing);
  Chain image(corr.dual.num_edges(), 0);
  for (Edge e = 0; e < corr.primal.num_edges(); ++e) {
    const Dart target = corr.dart_map[2 * e];
    image[corr.dual.dart_edge(target)] += target % 2 == 0 ? chain[e] : -chain[e];
  }
  return class_of(corr.dual, chain_boundary(corr.dual, image));
}

DivisorClass psi_class(const DualCorrespondence& corr, const DivisorClass& gamma,
                       ChainRouting routing) {
  return psi_divisor(corr, gamma.reduced, routing);
}

bool duality_square_check(const DualCorrespondence& corr, Vertex v, const DivisorClass& gamma,
                          const SpanningTree& t) {
  const SpanningTree lhs = dual_tree(corr, bernardi_act(corr.primal, v, gamma, t));
  const SpanningTree rhs = bernardi_act(corr.dual, 0, psi_class(corr, gamma), dual_tree(corr, t));
  return lhs == rhs;
}

DualitySquare::DualitySquare(std::shared_ptr<const GraphContext> primal, Vertex v,
                             DualConvention convention)
    : primal_(std::move(primal)),
      corr_(dual_graph(primal_->graph(), convention)),
      dual_(GraphContext::make(corr_.dual)),
      primal_action_(primal_, v),
      dual_action_(dual_, 0) {
  for (const auto& t : primal_->trees()) sigma_.push_back(dual_->tree_index().at(dual_tree(corr_, t)));
  for (const auto& c : primal_->picard().elements())
    psi_.push_back(dual_->picard().index_of(psi_class(corr_, c)));
}

bool DualitySquare::commutes(int element, int tree) const {
  const auto& gamma = primal_->picard().elements()[element];
  const auto& dual_gamma = dual_->picard().elements()[psi_[element]];
  const int lhs = sigma_[primal_action_.act(gamma, tree)];
  const int rhs = dual_action_.act(dual_gamma, sigma_[tree]);
  return lhs == rhs;
}

}  // namespace ribbon
