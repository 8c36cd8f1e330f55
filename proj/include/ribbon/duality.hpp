#pragma once

#include <memory>
#include <vector>

#include "ribbon/bernardi.hpp"
#include "ribbon/context.hpp"
#include "ribbon/divisor.hpp"
#include "ribbon/graph.hpp"

namespace ribbon {

/// How the dual ribbon structure is read off the faces.
struct DualConvention {
  /// Rotation at a dual vertex is the reverse of the face walk order.
  bool reverse_face_order = false;
  /// Dart d crosses to the dual dart from the face of d to the face of its
  /// reverse, instead of the other way round.
  bool flip_darts = false;

  static DualConvention standard();
  /// The mirror-image choice; breaks the duality square (debug only).
  static DualConvention mirror();

  bool operator==(const DualConvention&) const = default;
};

/// The dual of a planar bridgeless ribbon graph. Dual vertex i is face i of
/// trace_faces(primal); dual edge e is the edge crossing primal edge e.
struct DualCorrespondence {
  RibbonGraph primal;
  RibbonGraph dual;
  FaceDecomposition faces;
  /// Primal edge -> dual edge.
  std::vector<Edge> edge_map;
  /// Primal dart -> dual dart; commutes with reversal. By default dart d
  /// goes to the dual dart from the face of reverse(d) to the face of d.
  std::vector<Dart> dart_map;
  /// Face index -> dual vertex.
  std::vector<Vertex> face_map;
  DualConvention convention;
};

/// Throws NotPlanar or HasBridge.
DualCorrespondence dual_graph(const RibbonGraph& g,
                              DualConvention convention = DualConvention::standard());

/// The dual edges of the primal edges outside T.
SpanningTree dual_tree(const DualCorrespondence& corr, const SpanningTree& t);

enum class ChainRouting {
  /// Shortest paths, first found in file order.
  kBreadthFirst,
  /// Paths inside a depth-first search tree from the first vertex.
  kSearchTree,
};

/// A 1-chain indexed by edge: coefficient of the dart leaving the first
/// listed endpoint.
using Chain = std::vector<std::int64_t>;

/// A chain whose boundary (head minus tail per dart) equals d; chips are
/// paired greedily in file order. Throws DegreeMismatch unless deg d = 0.
Chain lift_to_chain(const RibbonGraph& g, const Divisor& d,
                    ChainRouting routing = ChainRouting::kBreadthFirst);

Divisor chain_boundary(const RibbonGraph& g, const Chain& chain);

/// Image in Pic^0 of the dual of the class of a degree-0 divisor.
DivisorClass psi_divisor(const DualCorrespondence& corr, const Divisor& d,
                         ChainRouting routing = ChainRouting::kBreadthFirst);
DivisorClass psi_class(const DualCorrespondence& corr, const DivisorClass& gamma,
                       ChainRouting routing = ChainRouting::kBreadthFirst);

/// sigma(gamma . T) == Psi(gamma) . sigma(T), with the Bernardi actions at
/// v on the primal and at the first dual vertex on the dual.
bool duality_square_check(const DualCorrespondence& corr, Vertex v, const DivisorClass& gamma,
                          const SpanningTree& t);

/// Tabulated form of the square for exhaustive checks.
class DualitySquare {
 public:
  DualitySquare(std::shared_ptr<const GraphContext> primal, Vertex v,
                DualConvention convention = DualConvention::standard());

  const DualCorrespondence& correspondence() const { return corr_; }
  const GraphContext& primal() const { return *primal_; }
  const GraphContext& dual() const { return *dual_; }

  /// sigma as tree indices.
  int dual_tree_index(int tree) const { return sigma_[tree]; }
  /// Psi on primal Picard elements, as dual Picard element indices.
  int psi_index(int element) const { return psi_[element]; }

  bool commutes(int element, int tree) const;

 private:
  std::shared_ptr<const GraphContext> primal_;
  DualCorrespondence corr_;
  std::shared_ptr<const GraphContext> dual_;
  BernardiTorsor primal_action_;
  BernardiTorsor dual_action_;
  std::vector<int> sigma_;
  std::vector<int> psi_;
};

}  // namespace ribbon
