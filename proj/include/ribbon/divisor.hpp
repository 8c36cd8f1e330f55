#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon {

/// Integer chip configuration, indexed by vertex.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(int num_vertices) : chips_(num_vertices, 0) {}
  explicit Divisor(std::vector<std::int64_t> chips) : chips_(std::move(chips)) {}

  /// The divisor (v).
  static Divisor point(int num_vertices, Vertex v);

  int size() const { return static_cast<int>(chips_.size()); }
  std::int64_t operator[](Vertex v) const { return chips_.at(v); }
  std::int64_t& operator[](Vertex v) { return chips_.at(v); }
  const std::vector<std::int64_t>& chips() const { return chips_; }

  std::int64_t degree() const;
  bool is_effective() const;
  bool is_zero() const;

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  Divisor operator-() const;
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(std::int64_t k, Divisor a) {
    for (auto& c : a.chips_) c *= k;
    return a;
  }

  auto operator<=>(const Divisor&) const = default;

 private:
  std::vector<std::int64_t> chips_;
};

/// The principal divisor of f: at v, the sum over edges vw of f(v) - f(w).
/// Throws MissingVertex unless f has one value per vertex.
Divisor laplacian_of(const RibbonGraph& g, std::span<const std::int64_t> f);

/// Fires every vertex of `set` once (subtracts the Laplacian of its indicator).
Divisor fire_set(const RibbonGraph& g, const Divisor& d, const std::vector<bool>& set);

/// Non-negative away from q, and Dhar's burning from q consumes every vertex.
bool is_q_reduced(const RibbonGraph& g, const Divisor& d, Vertex q);

/// The unique q-reduced divisor linearly equivalent to d.
Divisor q_reduce(const RibbonGraph& g, const Divisor& d, Vertex q);

/// Base vertex for canonical class representatives: the first vertex.
inline constexpr Vertex kClassBase = 0;

/// A linear equivalence class, stored as its q-reduced representative
/// with q = kClassBase.
struct DivisorClass {
  Divisor reduced;

  std::int64_t degree() const { return reduced.degree(); }
  auto operator<=>(const DivisorClass&) const = default;
};

DivisorClass class_of(const RibbonGraph& g, const Divisor& d);

bool are_equivalent(const RibbonGraph& g, const Divisor& a, const Divisor& b);

/// Pic^0 of a graph, enumerated through its q-reduced degree-0 divisors.
class PicardGroup {
 public:
  explicit PicardGroup(const RibbonGraph& g);

  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  Vertex base() const { return kClassBase; }
  const RibbonGraph& graph() const { return graph_; }

  /// Every class of degree 0, in a fixed order.
  const std::vector<DivisorClass>& elements() const { return elements_; }
  /// Position in elements(); -1 for classes of non-zero degree.
  int index_of(const DivisorClass& c) const;

  DivisorClass zero() const;
  DivisorClass class_of(const Divisor& d) const;
  DivisorClass add(const DivisorClass& a, const DivisorClass& b) const;
  DivisorClass negate(const DivisorClass& a) const;
  DivisorClass multiply(std::int64_t k, const DivisorClass& a) const;

  /// The classes [(u) - (q)] for every u other than the base q.
  std::vector<DivisorClass> generators() const;

 private:
  RibbonGraph graph_;
  std::vector<DivisorClass> elements_;
  std::map<Divisor, int> index_;
};

}  // namespace ribbon
