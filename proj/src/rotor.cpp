#include "ribbon/rotor.hpp"

#include <algorithm>
#include <queue>

#include "ribbon/error.hpp"

namespace ribbon {

RotorConfig rotors_from_tree(const RibbonGraph& g, const SpanningTree& t, Vertex root) {
  RotorConfig config{root, std::vector<Dart>(g.num_vertices(), -1)};
  std::vector<bool> seen(g.num_vertices(), false);
  std::queue<Vertex> frontier;
  frontier.push(root);
  seen[root] = true;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Edge e : t.edges()) {
      if (!g.incident(e, u)) continue;
      const Vertex w = g.other_end(e, u);
      if (seen[w]) continue;
      seen[w] = true;
      config.rotor[w] = g.dart(e, w);
      frontier.push(w);
    }
  }
  return config;
}

SpanningTree tree_of_rotors(const RibbonGraph& g, const RotorConfig& rotors) {
  std::vector<Edge> edges;
  for (Vertex z = 0; z < g.num_vertices(); ++z)
    if (z != rotors.root) edges.push_back(g.dart_edge(rotors.rotor[z]));
  std::sort(edges.begin(), edges.end());
  return SpanningTree(g, std::move(edges));
}

Vertex rotor_step(const RibbonGraph& g, RotorConfig& rotors, Vertex chip,
                  std::vector<RotorTraceStep>* trace) {
  if (chip == rotors.root || rotors.rotor[chip] < 0)
    throw ChipAtSink("chip is at the sink '" + g.vertex_id(chip) + "'");
  const Edge before = g.dart_edge(rotors.rotor[chip]);
  const Edge after = g.rotation_next(chip, before);
  rotors.rotor[chip] = g.dart(after, chip);
  const Vertex next = g.other_end(after, chip);
  if (trace) trace->push_back({chip, before, after, next});
  return next;
}

SpanningTree rotor_move(const RibbonGraph& g, const SpanningTree& t, Vertex x, Vertex y,
                        std::vector<RotorTraceStep>* trace) {
  if (x == y) return t;
  RotorConfig rotors = rotors_from_tree(g, t, y);
  Vertex chip = x;
  while (chip != y) chip = rotor_step(g, rotors, chip, trace);
  return tree_of_rotors(g, rotors);
}

namespace {

std::int64_t positive_mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

void require_degree_zero(const Divisor& d) {
  if (d.degree() != 0) throw DegreeMismatch("the acting class must have degree 0");
}

}  // namespace

SpanningTree rotor_act_divisor(const RibbonGraph& g, Vertex v, const Divisor& d,
                               const SpanningTree& t) {
  require_degree_zero(d);
  const std::int64_t order = laplacian_minor_determinant(g);
  SpanningTree current = t;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (u == v) continue;
    for (std::int64_t k = positive_mod(d[u], order); k > 0; --k)
      current = rotor_move(g, current, u, v);
  }
  return current;
}

SpanningTree rotor_act(const RibbonGraph& g, Vertex v, const DivisorClass& gamma,
                       const SpanningTree& t) {
  return rotor_act_divisor(g, v, gamma.reduced, t);
}

bool is_unicycle(const RibbonGraph& g, const UnicycleState& state) {
  const int n = g.num_vertices();
  if (static_cast<int>(state.rotor.size()) != n) return false;
  for (Vertex z = 0; z < n; ++z)
    if (state.rotor[z] < 0 || g.tail(state.rotor[z]) != z) return false;
  // Colour 0 unvisited, 1 on the current walk, 2 finished.
  std::vector<int> colour(n, 0);
  std::vector<bool> on_cycle(n, false);
  int cycles = 0;
  for (Vertex s = 0; s < n; ++s) {
    Vertex z = s;
    while (colour[z] == 0) {
      colour[z] = 1;
      z = g.head(state.rotor[z]);
    }
    if (colour[z] == 1) {
      ++cycles;
      Vertex w = z;
      do {
        on_cycle[w] = true;
        w = g.head(state.rotor[w]);
      } while (w != z);
    }
    for (z = s; colour[z] == 1; z = g.head(state.rotor[z])) colour[z] = 2;
  }
  return cycles == 1 && on_cycle[state.chip];
}

void unicycle_step(const RibbonGraph& g, UnicycleState& state) {
  const Vertex chip = state.chip;
  const Edge after = g.rotation_next(chip, g.dart_edge(state.rotor[chip]));
  state.rotor[chip] = g.dart(after, chip);
  state.chip = g.other_end(after, chip);
}

UnicycleOrbit unicycle_orbit(const RibbonGraph& g, const UnicycleState& start) {
  UnicycleOrbit orbit;
  UnicycleState state = start;
  for (int i = 1; i <= g.num_darts(); ++i) {
    const Vertex chip = state.chip;
    unicycle_step(g, state);
    orbit.darts.push_back(state.rotor[chip]);
    if (orbit.period < 0 && state == start) orbit.period = i;
  }
  std::vector<Dart> sorted = orbit.darts;
  std::sort(sorted.begin(), sorted.end());
  orbit.each_dart_once = true;
  for (int d = 0; d < static_cast<int>(sorted.size()); ++d)
    if (sorted[d] != d) orbit.each_dart_once = false;
  return orbit;
}

void validate_cycle(const RibbonGraph& g, const std::vector<Dart>& cycle) {
  if (cycle.size() < 2) throw NotACycle("a cycle needs at least two darts");
  std::vector<bool> vertex_seen(g.num_vertices(), false);
  std::vector<bool> edge_seen(g.num_edges(), false);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Dart d = cycle[i];
    if (d < 0 || d >= g.num_darts()) throw NotACycle("dart out of range");
    const Dart next = cycle[(i + 1) % cycle.size()];
    if (g.head(d) != g.tail(next)) throw NotACycle("darts do not chain head to tail");
    if (vertex_seen[g.tail(d)]) throw NotACycle("cycle repeats a vertex");
    if (edge_seen[g.dart_edge(d)]) throw NotACycle("cycle repeats an edge");
    vertex_seen[g.tail(d)] = true;
    edge_seen[g.dart_edge(d)] = true;
  }
}

UnicycleState unicycle_on_cycle(const RibbonGraph& g, const std::vector<Dart>& cycle,
                                UnicycleConstruction construction) {
  validate_cycle(g, cycle);
  const int n = g.num_vertices();
  UnicycleState state{std::vector<Dart>(n, -1), 0};
  std::vector<Vertex> on_cycle;
  for (Dart d : cycle) {
    state.rotor[g.tail(d)] = d;
    on_cycle.push_back(g.tail(d));
  }
  std::sort(on_cycle.begin(), on_cycle.end());

  std::vector<bool> seen(n, false);
  for (Vertex z : on_cycle) seen[z] = true;
  if (construction == UnicycleConstruction::kBreadthFirst) {
    state.chip = on_cycle.front();
    std::queue<Vertex> frontier;
    for (Vertex z : on_cycle) frontier.push(z);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (Edge e = 0; e < g.num_edges(); ++e) {
        if (!g.incident(e, u)) continue;
        const Vertex w = g.other_end(e, u);
        if (seen[w]) continue;
        seen[w] = true;
        state.rotor[w] = g.dart(e, w);
        frontier.push(w);
      }
    }
  } else {
    state.chip = on_cycle.back();
    std::vector<Vertex> stack(on_cycle.begin(), on_cycle.end());
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Edge e = g.num_edges() - 1; e >= 0; --e) {
        if (!g.incident(e, u)) continue;
        const Vertex w = g.other_end(e, u);
        if (seen[w]) continue;
        seen[w] = true;
        state.rotor[w] = g.dart(e, w);
        stack.push_back(w);
      }
    }
  }
  return state;
}

std::vector<std::vector<Dart>> directed_cycles(const RibbonGraph& g) {
  std::vector<std::vector<Dart>> out;
  const int n = g.num_vertices();
  std::vector<bool> on_path(n, false);
  std::vector<Dart> path;
  std::vector<std::vector<Edge>> incident(n);
  for (Edge e = 0; e < g.num_edges(); ++e) {
    incident[g.ends(e).first].push_back(e);
    incident[g.ends(e).second].push_back(e);
  }

  auto extend = [&](auto&& self, Vertex start, Vertex u) -> void {
    for (Edge e : incident[u]) {
      if (!path.empty() && g.dart_edge(path.back()) == e) continue;
      const Vertex w = g.other_end(e, u);
      if (w == start) {
        if (path.empty()) continue;
        path.push_back(g.dart(e, u));
        out.push_back(path);
        path.pop_back();
      } else if (w > start && !on_path[w]) {
        on_path[w] = true;
        path.push_back(g.dart(e, u));
        self(self, start, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on_path[s] = true;
    extend(extend, s, s);
    on_path[s] = false;
  }
  return out;
}

bool cycle_is_reversible(const RibbonGraph& g, const std::vector<Dart>& cycle,
                         UnicycleConstruction construction) {
  UnicycleState state = unicycle_on_cycle(g, cycle, construction);
  UnicycleState target = state;
  for (Dart d : cycle) target.rotor[g.head(d)] = RibbonGraph::reverse(d);
  for (int i = 0; i < g.num_darts(); ++i) {
    unicycle_step(g, state);
    if (state == target) return true;
  }
  return false;
}

RotorTorsor::RotorTorsor(std::shared_ptr<const GraphContext> context, Vertex v)
    : context_(std::move(context)), vertex_(v) {
  const RibbonGraph& g = context_->graph();
  const auto& trees = context_->trees();
  const auto& index = context_->tree_index();
  moves_.assign(g.num_vertices(), TreePermutation(trees.size()));
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (int i = 0; i < static_cast<int>(trees.size()); ++i)
      moves_[u][i] = u == v ? i : index.at(rotor_move(g, trees[i], u, v));
}

int RotorTorsor::act_divisor(const Divisor& d, int tree) const {
  require_degree_zero(d);
  const std::int64_t order = context_->picard().order();
  for (Vertex u = 0; u < static_cast<int>(moves_.size()); ++u) {
    if (u == vertex_) continue;
    for (std::int64_t k = positive_mod(d[u], order); k > 0; --k) tree = moves_[u][tree];
  }
  return tree;
}

SpanningTree RotorTorsor::act(const DivisorClass& gamma, const SpanningTree& t) const {
  return context_->trees()[act(gamma, context_->tree_index().at(t))];
}

TreePermutation RotorTorsor::permutation(const DivisorClass& gamma) const {
  TreePermutation out(context_->trees().size());
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i] = act(gamma, i);
  return out;
}

}  // namespace ribbon
