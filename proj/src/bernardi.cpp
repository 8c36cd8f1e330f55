#include "ribbon/bernardi.hpp"

#include <algorithm>

#include "ribbon/error.hpp"

namespace ribbon {

namespace {

void require_incident(const RibbonGraph& g, Vertex v, Edge e) {
  if (e < 0 || e >= g.num_edges() || !g.incident(e, v))
    throw NotIncident("initial edge is not incident to '" + g.vertex_id(v) + "'");
}

enum class Direction { kForward, kBackward };

// Rotation neighbour of e at v among active edges, skipping inactive ones.
Edge next_active(const RibbonGraph& g, Vertex v, Edge e, const std::vector<bool>& active,
                 Direction dir) {
  const auto rot = g.rotation(v);
  const int deg = static_cast<int>(rot.size());
  const int start = g.rotation_position(v, e);
  const int step = dir == Direction::kForward ? 1 : deg - 1;
  for (int k = 1; k <= deg; ++k) {
    const Edge candidate = rot[(start + k * step) % deg];
    if (active[candidate]) return candidate;
  }
  return e;
}

SpanningTree reconstruct(const RibbonGraph& g, Vertex v, Edge e, const Divisor& d,
                         const BreakOracle& oracle, Direction dir) {
  require_incident(g, v, e);
  if (d.size() != g.num_vertices() || d.degree() != g.genus())
    throw DegreeMismatch("break divisors have degree " + std::to_string(g.genus()));
  if (!d.is_effective()) throw NotBreakDivisor("divisor has negative coefficients");

  const int m = g.num_edges();
  std::vector<bool> active(m, true);
  std::vector<bool> in_tree(m, false);
  Divisor chips = d;
  Vertex here = v;
  Edge facing = dir == Direction::kForward ? e : g.rotation_prev(v, e);
  int undecided = m;

  // A genuine run is a prefix of a tour, so 2|E| steps always suffice.
  for (int step = 0; undecided > 0; ++step) {
    if (step > 2 * m) throw NotBreakDivisor("reconstruction did not terminate");
    const Vertex far = g.other_end(facing, here);
    bool cut = false;
    Divisor reduced;
    if (!in_tree[facing]) {
      const Vertex drop = dir == Direction::kForward ? here : far;
      active[facing] = false;
      if (chips[drop] > 0 && is_connected(g, active)) {
        reduced = chips;
        reduced[drop] -= 1;
        cut = oracle(g.subgraph(active), reduced);
      }
      if (!cut) active[facing] = true;
    }
    if (cut) {
      chips = std::move(reduced);
      --undecided;
      facing = next_active(g, here, facing, active, dir);
    } else {
      if (!in_tree[facing]) {
        in_tree[facing] = true;
        --undecided;
      }
      here = far;
      facing = next_active(g, here, facing, active, dir);
    }
  }

  std::vector<Edge> edges;
  for (Edge f = 0; f < m; ++f)
    if (in_tree[f]) edges.push_back(f);
  if (!is_spanning_tree(g, edges))
    throw NotBreakDivisor("reconstruction did not produce a spanning tree");
  return SpanningTree(g, std::move(edges));
}

}  // namespace

Tour bernardi_tour(const RibbonGraph& g, Vertex v, Edge e, const SpanningTree& t) {
  require_incident(g, v, e);
  Tour tour;
  tour.start_vertex = v;
  tour.start_edge = e;
  tour.eta.assign(g.num_edges(), -1);
  Vertex here = v;
  Edge facing = e;
  for (int i = 0; i < g.num_darts(); ++i) {
    if (t.contains(facing)) {
      tour.steps.push_back({here, facing, StepKind::kWalk});
      here = g.other_end(facing, here);
    } else {
      tour.steps.push_back({here, facing, StepKind::kCut});
      if (tour.eta[facing] < 0) tour.eta[facing] = here;
    }
    facing = g.rotation_next(here, facing);
  }
  return tour;
}

BreakDivisor bernardi_beta(const RibbonGraph& g, Vertex v, Edge e, const SpanningTree& t) {
  const Tour tour = bernardi_tour(g, v, e, t);
  Divisor d(g.num_vertices());
  for (Edge f = 0; f < g.num_edges(); ++f)
    if (!t.contains(f)) d[tour.eta[f]] += 1;
  return BreakDivisor{std::move(d), t};
}

SpanningTree alpha_right(const RibbonGraph& g, Vertex v, Edge e, const Divisor& d,
                         const BreakOracle& oracle) {
  return reconstruct(g, v, e, d, oracle, Direction::kForward);
}

SpanningTree alpha_left(const RibbonGraph& g, Vertex v, Edge e, const Divisor& d,
                        const BreakOracle& oracle) {
  return reconstruct(g, v, e, d, oracle, Direction::kBackward);
}

SpanningTree bernardi_act(const RibbonGraph& g, Vertex v, const DivisorClass& gamma,
                          const SpanningTree& t) {
  if (gamma.degree() != 0) throw DegreeMismatch("the acting class must have degree 0");
  if (g.num_edges() == 0) return t;
  const Edge e = g.rotation(v).front();
  const Divisor start = bernardi_beta(g, v, e, t).divisor;
  const DivisorClass target = class_of(g, start + gamma.reduced);
  const BreakDivisor rep = break_representative(g, target);
  return alpha_right(g, v, e, rep.divisor);
}

VertexSplit vertex_split(const RibbonGraph& g, Vertex v, Edge e1, Edge e2, const SpanningTree& t) {
  require_incident(g, v, e1);
  require_incident(g, v, e2);
  VertexSplit split;
  const int n = g.num_vertices();
  split.in_a.assign(n, false);
  split.in_b.assign(n, false);

  const auto rot = g.rotation(v);
  const int deg = static_cast<int>(rot.size());
  const int p1 = g.rotation_position(v, e1);
  const int p2 = g.rotation_position(v, e2);
  const int arc_length = (p2 - p1 + deg) % deg;
  for (int k = 0; k < deg; ++k)
    (k < arc_length ? split.arc_i : split.arc_j).push_back(rot[(p1 + k) % deg]);

  auto flood = [&](Edge root_edge, std::vector<bool>& side) {
    std::vector<Vertex> stack{g.other_end(root_edge, v)};
    side[stack.back()] = true;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Edge f : g.rotation(u)) {
        if (!t.contains(f)) continue;
        const Vertex w = g.other_end(f, u);
        if (w == v || side[w]) continue;
        side[w] = true;
        stack.push_back(w);
      }
    }
  };
  for (Edge f : split.arc_i)
    if (t.contains(f)) flood(f, split.in_a);
  for (Edge f : split.arc_j)
    if (t.contains(f)) flood(f, split.in_b);
  return split;
}

ShiftCheck shift_difference_check(const RibbonGraph& g, Vertex v, Edge e1, Edge e2,
                                  const SpanningTree& t) {
  ShiftCheck check;
  check.lhs = bernardi_beta(g, v, e1, t).divisor - bernardi_beta(g, v, e2, t).divisor;

  const VertexSplit split = vertex_split(g, v, e1, e2, t);
  std::vector<bool> on_i(g.num_edges(), false);
  for (Edge f : split.arc_i) on_i[f] = true;

  Divisor rhs(g.num_vertices());
  for (Edge f = 0; f < g.num_edges(); ++f) {
    if (t.contains(f)) continue;
    const auto [x, y] = g.ends(f);
    if (x != v && y != v) {
      if (split.in_a[x] && split.in_b[y]) {
        rhs[x] += 1;
        rhs[y] -= 1;
      } else if (split.in_a[y] && split.in_b[x]) {
        rhs[y] += 1;
        rhs[x] -= 1;
      }
      continue;
    }
    const Vertex other = x == v ? y : x;
    if (!on_i[f] && split.in_a[other]) {
      rhs[other] += 1;
      rhs[v] -= 1;
    } else if (on_i[f] && split.in_b[other]) {
      rhs[v] += 1;
      rhs[other] -= 1;
    }
  }
  check.rhs = std::move(rhs);
  check.equal = check.lhs == check.rhs;
  return check;
}

BernardiTorsor::BernardiTorsor(std::shared_ptr<const GraphContext> context, Vertex v,
                               std::optional<Edge> e, InverseMethod method)
    : context_(std::move(context)), vertex_(v), edge_(e) {
  const RibbonGraph& g = context_->graph();
  const auto& trees = context_->trees();
  const auto& breaks = context_->breaks();
  if (g.num_edges() == 0) {
    beta_.assign(trees.size(), 0);
    inverse_.assign(breaks.divisors().size(), 0);
    return;
  }
  if (!edge_) edge_ = g.rotation(v).front();

  beta_.reserve(trees.size());
  for (const auto& t : trees) {
    const int index = breaks.index_of_divisor(bernardi_beta(g, v, *edge_, t).divisor);
    if (index < 0) throw UniquenessViolation("Bernardi divisor missing from B(G)");
    beta_.push_back(index);
  }

  inverse_.assign(breaks.divisors().size(), -1);
  if (method == InverseMethod::kForwardTable) {
    for (int i = 0; i < static_cast<int>(beta_.size()); ++i) inverse_[beta_[i]] = i;
    if (std::count(inverse_.begin(), inverse_.end(), -1) > 0)
      throw UniquenessViolation("Bernardi map is not surjective");
    return;
  }
  const auto& index = context_->tree_index();
  for (int b = 0; b < static_cast<int>(inverse_.size()); ++b) {
    const Divisor& d = breaks.divisors()[b].divisor;
    const SpanningTree t = method == InverseMethod::kAlphaRight ? alpha_right(g, v, *edge_, d)
                                                                : alpha_left(g, v, *edge_, d);
    inverse_[b] = index.at(t);
  }
}

int BernardiTorsor::act(const DivisorClass& gamma, int tree) const {
  const RibbonGraph& g = context_->graph();
  if (g.num_edges() == 0) return tree;
  const auto& breaks = context_->breaks();
  const Divisor& start = breaks.divisors()[beta_[tree]].divisor;
  return inverse_[breaks.representative_index(class_of(g, start + gamma.reduced))];
}

SpanningTree BernardiTorsor::act(const DivisorClass& gamma, const SpanningTree& t) const {
  if (gamma.degree() != 0) throw DegreeMismatch("the acting class must have degree 0");
  return context_->trees()[act(gamma, context_->tree_index().at(t))];
}

TreePermutation BernardiTorsor::permutation(const DivisorClass& gamma) const {
  if (gamma.degree() != 0) throw DegreeMismatch("the acting class must have degree 0");
  TreePermutation out(context_->trees().size());
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i] = act(gamma, i);
  return out;
}

}  // namespace ribbon
