#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond the RibbonGraph accessors and are only fit for tiny graphs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "ribbon/graph.hpp"

namespace oracle {

using ribbon::Dart;
using ribbon::Edge;
using ribbon::RibbonGraph;
using ribbon::Vertex;
using Chips = std::vector<std::int64_t>;
using EdgeSet = std::vector<Edge>;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

inline bool is_tree(const RibbonGraph& g, const EdgeSet& edges) {
  if (static_cast<int>(edges.size()) != g.num_vertices() - 1) return false;
  UnionFind uf(g.num_vertices());
  for (Edge e : edges)
    if (!uf.unite(g.ends(e).first, g.ends(e).second)) return false;
  return true;
}

/// Every (|V|-1)-subset of edges that is acyclic, as sorted edge lists.
inline std::vector<EdgeSet> trees(const RibbonGraph& g) {
  std::vector<EdgeSet> out;
  const int m = g.num_edges();
  const int k = g.num_vertices() - 1;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + std::min(k, m), true);
  do {
    EdgeSet edges;
    for (int e = 0; e < m; ++e)
      if (pick[e]) edges.push_back(e);
    if (is_tree(g, edges)) out.push_back(edges);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Reduced Laplacian determinant with exact fraction-free elimination.
inline std::int64_t reduced_laplacian_determinant(const RibbonGraph& g) {
  const int n = g.num_vertices() - 1;
  if (n == 0) return 1;
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
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
    previous = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

inline Chips laplacian(const RibbonGraph& g, const Chips& f) {
  Chips out(g.num_vertices(), 0);
  for (Edge e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.ends(e);
    out[a] += f[a] - f[b];
    out[b] += f[b] - f[a];
  }
  return out;
}

/// Whether a - b is a Laplacian image of some f with entries in [-box, box].
inline bool equivalent_in_box(const RibbonGraph& g, const Chips& a, const Chips& b, int box) {
  const int n = g.num_vertices();
  Chips f(n, -box);
  f[0] = 0;
  while (true) {
    Chips lf = laplacian(g, f);
    bool hit = true;
    for (int v = 0; v < n && hit; ++v) hit = a[v] - b[v] == lf[v];
    if (hit) return true;
    int v = 1;
    while (v < n && f[v] == box) f[v++] = -box;
    if (v >= n) return false;
    ++f[v];
  }
}

/// Definition of q-reduced: effective off q, and no non-empty set avoiding q
/// can fire without some vertex going negative.
inline bool is_q_reduced(const RibbonGraph& g, const Chips& d, Vertex q) {
  const int n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v)
    if (v != q && d[v] < 0) return false;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (mask & (1u << q)) continue;
    bool legal = true;
    for (Vertex v = 0; v < n && legal; ++v) {
      if (!(mask & (1u << v))) continue;
      std::int64_t out = 0;
      for (Edge e = 0; e < g.num_edges(); ++e) {
        const auto [a, b] = g.ends(e);
        if ((a == v && !(mask & (1u << b))) || (b == v && !(mask & (1u << a)))) ++out;
      }
      legal = d[v] >= out;
    }
    if (legal) return false;
  }
  return true;
}

/// Every divisor obtained by orienting each non-tree edge of every tree.
inline std::set<Chips> break_divisors(const RibbonGraph& g) {
  std::set<Chips> out;
  for (const auto& t : trees(g)) {
    EdgeSet outside;
    for (Edge e = 0; e < g.num_edges(); ++e)
      if (!std::binary_search(t.begin(), t.end(), e)) outside.push_back(e);
    for (std::uint32_t mask = 0; mask < (1u << outside.size()); ++mask) {
      Chips d(g.num_vertices(), 0);
      for (std::size_t i = 0; i < outside.size(); ++i) {
        const auto [a, b] = g.ends(outside[i]);
        ++d[(mask >> i) & 1u ? b : a];
      }
      out.insert(d);
    }
  }
  return out;
}

inline std::size_t next_index(std::span<const Edge> rot, Edge e) {
  const auto pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), e) - rot.begin());
  return (pos + 1) % rot.size();
}

struct Step {
  Vertex at;
  Edge edge;
  bool walk;
  bool operator==(const Step&) const = default;
};

/// The walk/cut tour simulated directly on rotation lists.
inline std::vector<Step> tour(const RibbonGraph& g, Vertex v, Edge e, const EdgeSet& t) {
  std::vector<Step> steps;
  Vertex at = v;
  Edge current = e;
  do {
    const bool walk = std::binary_search(t.begin(), t.end(), current);
    steps.push_back({at, current, walk});
    if (walk) at = g.ends(current).first == at ? g.ends(current).second : g.ends(current).first;
    current = g.rotation(at)[next_index(g.rotation(at), current)];
  } while (!(at == v && current == e));
  return steps;
}

/// Sum of first-cut endpoints over non-tree edges.
inline Chips bernardi_divisor(const RibbonGraph& g, Vertex v, Edge e, const EdgeSet& t) {
  Chips d(g.num_vertices(), 0);
  std::set<Edge> seen;
  for (const auto& s : tour(g, v, e, t))
    if (!s.walk && seen.insert(s.edge).second) ++d[s.at];
  return d;
}

/// Route a chip from x to the sink y; rotors stored as edges, tree edges
/// pointing toward y.
inline EdgeSet rotor_route(const RibbonGraph& g, const EdgeSet& t, Vertex x, Vertex y) {
  const int n = g.num_vertices();
  std::vector<Edge> rotor(n, -1);
  std::vector<Vertex> queue{y};
  std::vector<bool> seen(n, false);
  seen[y] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Edge e : t) {
      const auto [a, b] = g.ends(e);
      const Vertex w = a == queue[i] ? b : (b == queue[i] ? a : -1);
      if (w >= 0 && !seen[w]) {
        seen[w] = true;
        rotor[w] = e;
        queue.push_back(w);
      }
    }
  Vertex chip = x;
  while (chip != y) {
    rotor[chip] = g.rotation(chip)[next_index(g.rotation(chip), rotor[chip])];
    const auto [a, b] = g.ends(rotor[chip]);
    chip = a == chip ? b : a;
  }
  EdgeSet out;
  for (Vertex v = 0; v < n; ++v)
    if (v != y) out.push_back(rotor[v]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of orbits of the face permutation, computed from rotation lists.
inline int face_count(const RibbonGraph& g) {
  const int darts = 2 * g.num_edges();
  std::vector<bool> seen(darts, false);
  int faces = 0;
  for (Dart start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    ++faces;
    for (Dart d = start; !seen[d];) {
      seen[d] = true;
      const Edge e = d / 2;
      const Vertex head = d % 2 == 0 ? g.ends(e).second : g.ends(e).first;
      const Edge next = g.rotation(head)[next_index(g.rotation(head), e)];
      d = 2 * next + (g.ends(next).first == head ? 0 : 1);
    }
  }
  return std::max(faces, 1);
}

inline int topological_genus(const RibbonGraph& g) {
  return (2 - g.num_vertices() + g.num_edges() - face_count(g)) / 2;
}

}  // namespace oracle
