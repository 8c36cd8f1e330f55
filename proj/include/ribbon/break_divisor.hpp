#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ribbon/divisor.hpp"
#include "ribbon/graph.hpp"

namespace ribbon {

/// Effective divisor of degree g realised by some spanning tree: one chip at
/// an endpoint of every edge outside the tree.
struct BreakDivisor {
  Divisor divisor;
  std::optional<SpanningTree> witness;
};

/// For each non-tree edge (indexed by edge, -1 on tree edges) the endpoint
/// receiving its chip, if the non-tree edges can be assigned to endpoints so
/// that vertex v receives exactly d[v] of them.
///
/// Throws DegreeMismatch unless deg d = g and d is effective.
std::optional<std::vector<Vertex>> compatible_assignment(const RibbonGraph& g, const Divisor& d,
                                                         const SpanningTree& t);

bool is_compatible(const RibbonGraph& g, const Divisor& d, const SpanningTree& t);

/// Decides break-divisor membership on a graph. Implementations must return
/// false (not throw) for divisors of the wrong degree or with negative chips.
using BreakOracle = std::function<bool(const RibbonGraph&, const Divisor&)>;

/// Exact membership: searches every spanning tree for a compatible
/// assignment, stopping at the first witness.
bool is_break_divisor(const RibbonGraph& g, const Divisor& d);
std::optional<SpanningTree> break_witness(const RibbonGraph& g, const Divisor& d);

/// Membership through the subgraph bound: deg(d restricted to S) is at
/// least |E(S)| - |S| + (components of S) for every vertex subset S.
/// Exponential in |V|; used as an independent cross-check.
bool satisfies_subgraph_bounds(const RibbonGraph& g, const Divisor& d);

BreakOracle exact_break_oracle();

/// All break divisors, sorted by coefficient vector, each with the first
/// witness tree found.
std::vector<BreakDivisor> enumerate_break_divisors(const RibbonGraph& g);

/// The unique break divisor in a degree-g class. Throws DegreeMismatch for
/// other degrees and UniquenessViolation if the scan finds zero or several.
BreakDivisor break_representative(const RibbonGraph& g, const DivisorClass& c);
BreakDivisor break_representative(const RibbonGraph& g, const DivisorClass& c,
                                  const std::vector<BreakDivisor>& candidates);

/// Precomputed class -> break divisor lookup for repeated queries.
class BreakClassIndex {
 public:
  explicit BreakClassIndex(const RibbonGraph& g);
  BreakClassIndex(const RibbonGraph& g, std::vector<BreakDivisor> divisors);

  const std::vector<BreakDivisor>& divisors() const { return divisors_; }
  /// Index into divisors() of the break divisor in class c.
  int representative_index(const DivisorClass& c) const;
  const BreakDivisor& representative(const DivisorClass& c) const {
    return divisors_[representative_index(c)];
  }
  int index_of_divisor(const Divisor& d) const;

 private:
  std::vector<BreakDivisor> divisors_;
  std::map<Divisor, int> by_class_;
  std::map<Divisor, int> by_divisor_;
};

}  // namespace ribbon
