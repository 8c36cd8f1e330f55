#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ribbon/break_divisor.hpp"
#include "ribbon/context.hpp"
#include "ribbon/divisor.hpp"
#include "ribbon/graph.hpp"

namespace ribbon {

enum class StepKind { kWalk, kCut };

struct TourStep {
  Vertex at;
  Edge edge;
  StepKind kind;

  bool operator==(const TourStep&) const = default;
};

/// The walk/cut traversal of a spanning tree from initial data (v, e).
///
/// The state is a (vertex, incident edge) pair. A tree edge is walked to
/// its far endpoint w, continuing with the rotation successor at w; a
/// non-tree edge is cut where the tour stands, continuing with the
/// successor at the same vertex. The tour has exactly 2|E| steps and
/// returns to (v, e).
struct Tour {
  Vertex start_vertex = 0;
  Edge start_edge = 0;
  std::vector<TourStep> steps;
  /// eta[e]: vertex where non-tree edge e is cut first; -1 on tree edges.
  std::vector<Vertex> eta;
};

Tour bernardi_tour(const RibbonGraph& g, Vertex v, Edge e, const SpanningTree& t);

/// Sum of (eta(e')) over edges e' outside T, with T as witness.
BreakDivisor bernardi_beta(const RibbonGraph& g, Vertex v, Edge e, const SpanningTree& t);

/// Rebuilds the tree with the given Bernardi divisor by touring forward from
/// (v, e), cutting e' at v' exactly when e' is not yet in the tree, G - e'
/// stays connected and D - (v') is a break divisor of G - e'.
/// Throws NotBreakDivisor when d is not a break divisor.
SpanningTree alpha_right(const RibbonGraph& g, Vertex v, Edge e, const Divisor& d,
                         const BreakOracle& oracle = exact_break_oracle());

/// Same reconstruction touring backwards from the rotation predecessor of e,
/// removing the chip at the far endpoint w' instead of at v'.
SpanningTree alpha_left(const RibbonGraph& g, Vertex v, Edge e, const Divisor& d,
                        const BreakOracle& oracle = exact_break_oracle());

/// The action of a degree-0 class on S(G) transported through beta_(v,e),
/// with e the first edge in the rotation at v.
SpanningTree bernardi_act(const RibbonGraph& g, Vertex v, const DivisorClass& gamma,
                          const SpanningTree& t);

/// Removing v from T splits the other vertices: `in_a` holds those whose
/// tree component hangs off an edge of the arc I = [e1, e2) of the rotation
/// at v, `in_b` those attached through J = [e2, e1).
struct VertexSplit {
  std::vector<bool> in_a;
  std::vector<bool> in_b;
  std::vector<Edge> arc_i;
  std::vector<Edge> arc_j;
};

VertexSplit vertex_split(const RibbonGraph& g, Vertex v, Edge e1, Edge e2, const SpanningTree& t);

struct ShiftCheck {
  Divisor lhs;
  Divisor rhs;
  bool equal = false;
};

/// Compares beta_(v,e1)(T) - beta_(v,e2)(T), computed from two tours, with
/// the closed form read off the split: sum over non-tree edges ab across the
/// split of (a) - (b), plus (a') - (v) for edges va' in J with a' in A, plus
/// (v) - (b') for edges vb' in I with b' in B.
ShiftCheck shift_difference_check(const RibbonGraph& g, Vertex v, Edge e1, Edge e2,
                                  const SpanningTree& t);

enum class InverseMethod {
  kAlphaRight,
  kAlphaLeft,
  /// Inverts the forward table T -> beta(T); only valid once bijectivity
  /// has been established.
  kForwardTable,
};

/// The Bernardi action beta_v tabulated over S(G).
class BernardiTorsor {
 public:
  BernardiTorsor(std::shared_ptr<const GraphContext> context, Vertex v,
                 std::optional<Edge> e = std::nullopt,
                 InverseMethod method = InverseMethod::kAlphaRight);

  const GraphContext& context() const { return *context_; }
  Vertex vertex() const { return vertex_; }
  std::optional<Edge> edge() const { return edge_; }

  /// Index of gamma . trees()[tree].
  int act(const DivisorClass& gamma, int tree) const;
  SpanningTree act(const DivisorClass& gamma, const SpanningTree& t) const;
  TreePermutation permutation(const DivisorClass& gamma) const;

  /// Index into context().breaks().divisors() of beta(trees()[tree]).
  int beta_index(int tree) const { return beta_[tree]; }

 private:
  std::shared_ptr<const GraphContext> context_;
  Vertex vertex_;
  std::optional<Edge> edge_;
  std::vector<int> beta_;
  std::vector<int> inverse_;
};

}  // namespace ribbon
