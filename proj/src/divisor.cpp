#include "ribbon/divisor.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ribbon/error.hpp"

namespace ribbon {

Divisor Divisor::point(int num_vertices, Vertex v) {
  Divisor d(num_vertices);
  d[v] = 1;
  return d;
}

std::int64_t Divisor::degree() const {
  return std::accumulate(chips_.begin(), chips_.end(), std::int64_t{0});
}

bool Divisor::is_effective() const {
  return std::all_of(chips_.begin(), chips_.end(), [](std::int64_t c) { return c >= 0; });
}

bool Divisor::is_zero() const {
  return std::all_of(chips_.begin(), chips_.end(), [](std::int64_t c) { return c == 0; });
}

Divisor& Divisor::operator+=(const Divisor& other) {
  if (chips_.size() != other.chips_.size()) throw DegreeMismatch("divisors on different graphs");
  for (std::size_t i = 0; i < chips_.size(); ++i) chips_[i] += other.chips_[i];
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  if (chips_.size() != other.chips_.size()) throw DegreeMismatch("divisors on different graphs");
  for (std::size_t i = 0; i < chips_.size(); ++i) chips_[i] -= other.chips_[i];
  return *this;
}

Divisor Divisor::operator-() const {
  Divisor out = *this;
  for (auto& c : out.chips_) c = -c;
  return out;
}

Divisor laplacian_of(const RibbonGraph& g, std::span<const std::int64_t> f) {
  if (static_cast<int>(f.size()) != g.num_vertices())
    throw MissingVertex("function must assign a value to every vertex");
  Divisor out(g.num_vertices());
  for (Edge e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.ends(e);
    out[a] += f[a] - f[b];
    out[b] += f[b] - f[a];
  }
  return out;
}

Divisor fire_set(const RibbonGraph& g, const Divisor& d, const std::vector<bool>& set) {
  Divisor out = d;
  for (Edge e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.ends(e);
    if (set[a] == set[b]) continue;
    const Vertex giver = set[a] ? a : b;
    out[giver] -= 1;
    out[g.other_end(e, giver)] += 1;
  }
  return out;
}

namespace {

// Dhar's burning from q. Returns the unburnt set (empty when d is q-reduced,
// assuming d is non-negative away from q).
std::vector<bool> unburnt_set(const RibbonGraph& g, const Divisor& d, Vertex q) {
  const int n = g.num_vertices();
  std::vector<bool> burnt(n, false);
  std::vector<std::int64_t> heat(n, 0);
  std::vector<Vertex> fire{q};
  burnt[q] = true;
  while (!fire.empty()) {
    const Vertex u = fire.back();
    fire.pop_back();
    for (Edge e : g.rotation(u)) {
      const Vertex w = g.other_end(e, u);
      if (burnt[w]) continue;
      if (++heat[w] > d[w]) {
        burnt[w] = true;
        fire.push_back(w);
      }
    }
  }
  std::vector<bool> rest(n);
  for (Vertex v = 0; v < n; ++v) rest[v] = !burnt[v];
  return rest;
}

}  // namespace

bool is_q_reduced(const RibbonGraph& g, const Divisor& d, Vertex q) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (v != q && d[v] < 0) return false;
  const auto rest = unburnt_set(g, d, q);
  return std::none_of(rest.begin(), rest.end(), [](bool b) { return b; });
}

Divisor q_reduce(const RibbonGraph& g, const Divisor& d, Vertex q) {
  const int n = g.num_vertices();
  if (d.size() != n) throw MissingVertex("divisor size does not match the graph");
  Divisor out = d;
  if (n == 1) return out;

  // |Pic^0| * ((v) - (q)) is principal, so debt can be cleared by moving
  // multiples of the group order from q.
  const std::int64_t order = laplacian_minor_determinant(g);
  for (Vertex v = 0; v < n; ++v) {
    if (v == q || out[v] >= 0) continue;
    const std::int64_t k = (-out[v] + order - 1) / order;
    out[v] += k * order;
    out[q] -= k * order;
  }

  for (;;) {
    const auto rest = unburnt_set(g, out, q);
    if (std::none_of(rest.begin(), rest.end(), [](bool b) { return b; })) return out;
    std::vector<std::int64_t> leaving(n, 0);
    for (Edge e = 0; e < g.num_edges(); ++e) {
      const auto [a, b] = g.ends(e);
      if (rest[a] && !rest[b]) ++leaving[a];
      if (rest[b] && !rest[a]) ++leaving[b];
    }
    std::int64_t times = std::numeric_limits<std::int64_t>::max();
    for (Vertex v = 0; v < n; ++v)
      if (rest[v] && leaving[v] > 0) times = std::min(times, out[v] / leaving[v]);
    for (Edge e = 0; e < g.num_edges(); ++e) {
      const auto [a, b] = g.ends(e);
      if (rest[a] == rest[b]) continue;
      const Vertex giver = rest[a] ? a : b;
      out[giver] -= times;
      out[g.other_end(e, giver)] += times;
    }
  }
}

DivisorClass class_of(const RibbonGraph& g, const Divisor& d) {
  return DivisorClass{q_reduce(g, d, kClassBase)};
}

bool are_equivalent(const RibbonGraph& g, const Divisor& a, const Divisor& b) {
  if (a.degree() != b.degree()) return false;
  const Divisor zero(g.num_vertices());
  return q_reduce(g, a - b, kClassBase) == q_reduce(g, zero, kClassBase);
}

PicardGroup::PicardGroup(const RibbonGraph& g) : graph_(g) {
  const int n = g.num_vertices();
  // q-reduced divisors satisfy 0 <= D(v) < deg(v) away from q; walk that box.
  Divisor candidate(n);
  for (;;) {
    std::int64_t rest = 0;
    for (Vertex v = 0; v < n; ++v)
      if (v != kClassBase) rest += candidate[v];
    candidate[kClassBase] = -rest;
    if (is_q_reduced(g, candidate, kClassBase)) elements_.push_back(DivisorClass{candidate});

    Vertex v = 0;
    for (; v < n; ++v) {
      if (v == kClassBase) continue;
      if (candidate[v] + 1 < g.degree(v)) {
        ++candidate[v];
        break;
      }
      candidate[v] = 0;
    }
    if (v == n) break;
  }
  std::sort(elements_.begin(), elements_.end());
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i) index_.emplace(elements_[i].reduced, i);
}

int PicardGroup::index_of(const DivisorClass& c) const {
  auto it = index_.find(c.reduced);
  return it == index_.end() ? -1 : it->second;
}

DivisorClass PicardGroup::zero() const { return DivisorClass{Divisor(graph_.num_vertices())}; }

DivisorClass PicardGroup::class_of(const Divisor& d) const { return ribbon::class_of(graph_, d); }

DivisorClass PicardGroup::add(const DivisorClass& a, const DivisorClass& b) const {
  return class_of(a.reduced + b.reduced);
}

DivisorClass PicardGroup::negate(const DivisorClass& a) const { return class_of(-a.reduced); }

DivisorClass PicardGroup::multiply(std::int64_t k, const DivisorClass& a) const {
  return class_of(k * a.reduced);
}

std::vector<DivisorClass> PicardGroup::generators() const {
  std::vector<DivisorClass> out;
  const int n = graph_.num_vertices();
  for (Vertex u = 0; u < n; ++u) {
    if (u == kClassBase) continue;
    out.push_back(class_of(Divisor::point(n, u) - Divisor::point(n, kClassBase)));
  }
  return out;
}

}  // namespace ribbon
