#include "ribbon/break_divisor.hpp"

#include <numeric>

#include "ribbon/error.hpp"

namespace ribbon {

namespace {

struct AssignmentSearch {
  const RibbonGraph& g;
  std::vector<Edge> edges;
  std::vector<std::int64_t> capacity;
  std::vector<std::int64_t> available;
  std::vector<Vertex> chosen;

  bool feasible(Vertex v) const { return capacity[v] <= available[v]; }

  bool run(std::size_t i) {
    if (i == edges.size()) return true;
    const Edge e = edges[i];
    const auto [a, b] = g.ends(e);
    --available[a];
    --available[b];
    for (Vertex target : {a, b}) {
      if (capacity[target] == 0) continue;
      --capacity[target];
      if (feasible(a) && feasible(b)) {
        chosen[e] = target;
        if (run(i + 1)) return true;
      }
      ++capacity[target];
    }
    ++available[a];
    ++available[b];
    chosen[e] = -1;
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> compatible_assignment(const RibbonGraph& g, const Divisor& d,
                                                         const SpanningTree& t) {
  if (d.size() != g.num_vertices() || d.degree() != g.genus() || !d.is_effective())
    throw DegreeMismatch("a T-break divisor is effective of degree " + std::to_string(g.genus()));
  AssignmentSearch search{g, {}, d.chips(), std::vector<std::int64_t>(g.num_vertices(), 0),
                          std::vector<Vertex>(g.num_edges(), -1)};
  for (Edge e = 0; e < g.num_edges(); ++e) {
    if (t.contains(e)) continue;
    search.edges.push_back(e);
    ++search.available[g.ends(e).first];
    ++search.available[g.ends(e).second];
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!search.feasible(v)) return std::nullopt;
  if (!search.run(0)) return std::nullopt;
  return search.chosen;
}

bool is_compatible(const RibbonGraph& g, const Divisor& d, const SpanningTree& t) {
  return compatible_assignment(g, d, t).has_value();
}

std::optional<SpanningTree> break_witness(const RibbonGraph& g, const Divisor& d) {
  if (d.size() != g.num_vertices() || d.degree() != g.genus() || !d.is_effective())
    return std::nullopt;
  for (const auto& t : spanning_trees(g))
    if (compatible_assignment(g, d, t)) return t;
  return std::nullopt;
}

bool is_break_divisor(const RibbonGraph& g, const Divisor& d) {
  return break_witness(g, d).has_value();
}

bool satisfies_subgraph_bounds(const RibbonGraph& g, const Divisor& d) {
  const int n = g.num_vertices();
  if (d.size() != n || d.degree() != g.genus() || !d.is_effective()) return false;
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    auto in = [subset](Vertex v) { return (subset >> v) & 1u; };
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::int64_t chips = 0;
    int size = 0;
    for (Vertex v = 0; v < n; ++v)
      if (in(v)) {
        chips += d[v];
        ++size;
      }
    int components = size;
    int edges = 0;
    for (Edge e = 0; e < g.num_edges(); ++e) {
      const auto [a, b] = g.ends(e);
      if (!in(a) || !in(b)) continue;
      ++edges;
      const int ra = find(a), rb = find(b);
      if (ra != rb) {
        parent[rb] = ra;
        --components;
      }
    }
    if (chips < edges - size + components) return false;
  }
  return true;
}

BreakOracle exact_break_oracle() { return &is_break_divisor; }

std::vector<BreakDivisor> enumerate_break_divisors(const RibbonGraph& g) {
  std::map<Divisor, SpanningTree> found;
  for (const auto& t : spanning_trees(g)) {
    std::vector<Edge> outside;
    for (Edge e = 0; e < g.num_edges(); ++e)
      if (!t.contains(e)) outside.push_back(e);
    const std::uint64_t count = std::uint64_t{1} << outside.size();
    for (std::uint64_t choice = 0; choice < count; ++choice) {
      Divisor d(g.num_vertices());
      for (std::size_t i = 0; i < outside.size(); ++i) {
        const auto [a, b] = g.ends(outside[i]);
        d[((choice >> i) & 1u) ? b : a] += 1;
      }
      found.try_emplace(std::move(d), t);
    }
  }
  std::vector<BreakDivisor> out;
  out.reserve(found.size());
  for (auto& [d, t] : found) out.push_back(BreakDivisor{d, t});
  return out;
}

BreakDivisor break_representative(const RibbonGraph& g, const DivisorClass& c,
                                  const std::vector<BreakDivisor>& candidates) {
  if (c.degree() != g.genus())
    throw DegreeMismatch("break representatives exist in degree " + std::to_string(g.genus()));
  const BreakDivisor* match = nullptr;
  for (const auto& b : candidates) {
    if (class_of(g, b.divisor) != c) continue;
    if (match) throw UniquenessViolation("two break divisors share a class");
    match = &b;
  }
  if (!match) throw UniquenessViolation("no break divisor in class");
  return *match;
}

BreakDivisor break_representative(const RibbonGraph& g, const DivisorClass& c) {
  return break_representative(g, c, enumerate_break_divisors(g));
}

BreakClassIndex::BreakClassIndex(const RibbonGraph& g)
    : BreakClassIndex(g, enumerate_break_divisors(g)) {}

BreakClassIndex::BreakClassIndex(const RibbonGraph& g, std::vector<BreakDivisor> divisors)
    : divisors_(std::move(divisors)) {
  for (int i = 0; i < static_cast<int>(divisors_.size()); ++i) {
    const auto& d = divisors_[i].divisor;
    if (!by_class_.emplace(class_of(g, d).reduced, i).second)
      throw UniquenessViolation("two break divisors share a class");
    by_divisor_.emplace(d, i);
  }
}

int BreakClassIndex::representative_index(const DivisorClass& c) const {
  if (!divisors_.empty() && c.degree() != divisors_.front().divisor.degree())
    throw DegreeMismatch("break representatives exist in degree " +
                         std::to_string(divisors_.front().divisor.degree()));
  auto it = by_class_.find(c.reduced);
  if (it == by_class_.end()) throw UniquenessViolation("no break divisor in class");
  return it->second;
}

int BreakClassIndex::index_of_divisor(const Divisor& d) const {
  auto it = by_divisor_.find(d);
  return it == by_divisor_.end() ? -1 : it->second;
}

}  // namespace ribbon
