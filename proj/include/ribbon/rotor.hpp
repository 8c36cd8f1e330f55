#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ribbon/context.hpp"
#include "ribbon/divisor.hpp"
#include "ribbon/graph.hpp"

namespace ribbon {

/// An outgoing dart at every vertex except the root (rotor[root] == -1).
struct RotorConfig {
  Vertex root = 0;
  std::vector<Dart> rotor;

  bool operator==(const RotorConfig&) const = default;
};

/// Tree edges oriented toward the root.
RotorConfig rotors_from_tree(const RibbonGraph& g, const SpanningTree& t, Vertex root);

/// The edges under the rotors of every non-root vertex. Throws
/// NotASpanningTree if they do not form one.
SpanningTree tree_of_rotors(const RibbonGraph& g, const RotorConfig& rotors);

struct RotorTraceStep {
  Vertex chip;
  Edge before;
  Edge after;
  Vertex next;
};

/// Advances the rotor at `chip` to its rotation successor and returns the
/// far endpoint of the new rotor edge. Throws ChipAtSink at the root.
Vertex rotor_step(const RibbonGraph& g, RotorConfig& rotors, Vertex chip,
                  std::vector<RotorTraceStep>* trace = nullptr);

/// ((x) - (y))_y applied to T: route a chip from x with the tree rotors
/// toward y until it first reaches y.
SpanningTree rotor_move(const RibbonGraph& g, const SpanningTree& t, Vertex x, Vertex y,
                        std::vector<RotorTraceStep>* trace = nullptr);

/// Action of the class of `d` (degree 0) through rotor moves toward v.
/// Coefficients are taken mod |Pic^0| so any representative works.
SpanningTree rotor_act_divisor(const RibbonGraph& g, Vertex v, const Divisor& d,
                               const SpanningTree& t);

SpanningTree rotor_act(const RibbonGraph& g, Vertex v, const DivisorClass& gamma,
                       const SpanningTree& t);

/// Sink-free rotor state: a rotor at every vertex plus the chip.
struct UnicycleState {
  std::vector<Dart> rotor;
  Vertex chip = 0;

  bool operator==(const UnicycleState&) const = default;
};

/// True iff the rotor digraph has exactly one directed cycle and the chip
/// is on it.
bool is_unicycle(const RibbonGraph& g, const UnicycleState& state);

void unicycle_step(const RibbonGraph& g, UnicycleState& state);

struct UnicycleOrbit {
  /// Steps until the start state recurs, or -1 if it does not within 2|E|.
  int period = -1;
  /// Darts traversed during the first 2|E| steps, in order.
  std::vector<Dart> darts;
  bool each_dart_once = false;
};

UnicycleOrbit unicycle_orbit(const RibbonGraph& g, const UnicycleState& start);

/// Rotors off the cycle are oriented toward it along a search tree.
enum class UnicycleConstruction {
  /// Breadth-first from the cycle in file order; chip at the least cycle vertex.
  kBreadthFirst,
  /// Depth-first from the cycle in reverse file order; chip at the greatest
  /// cycle vertex.
  kDepthFirst,
};

/// Throws NotACycle unless `cycle` is a closed simple dart path.
void validate_cycle(const RibbonGraph& g, const std::vector<Dart>& cycle);

UnicycleState unicycle_on_cycle(const RibbonGraph& g, const std::vector<Dart>& cycle,
                                UnicycleConstruction construction =
                                    UnicycleConstruction::kBreadthFirst);

/// Every simple directed cycle (length >= 2, no repeated edge), each listed
/// once starting from its least vertex.
std::vector<std::vector<Dart>> directed_cycles(const RibbonGraph& g);

/// Whether the unicycle with the cycle reversed lies in the orbit of the
/// unicycle on the cycle.
bool cycle_is_reversible(const RibbonGraph& g, const std::vector<Dart>& cycle,
                         UnicycleConstruction construction = UnicycleConstruction::kBreadthFirst);

/// The rotor-routing action r_v tabulated over S(G).
class RotorTorsor {
 public:
  RotorTorsor(std::shared_ptr<const GraphContext> context, Vertex v);

  const GraphContext& context() const { return *context_; }
  Vertex vertex() const { return vertex_; }

  /// Index of trees()[tree] after ((u) - (v))_v.
  int move(Vertex u, int tree) const { return moves_[u][tree]; }
  /// Action of the class of any degree-0 representative.
  int act_divisor(const Divisor& d, int tree) const;
  int act(const DivisorClass& gamma, int tree) const { return act_divisor(gamma.reduced, tree); }
  SpanningTree act(const DivisorClass& gamma, const SpanningTree& t) const;
  TreePermutation permutation(const DivisorClass& gamma) const;

 private:
  std::shared_ptr<const GraphContext> context_;
  Vertex vertex_;
  std::vector<TreePermutation> moves_;
};

}  // namespace ribbon
