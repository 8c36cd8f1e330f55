#pragma once

#include <memory>
#include <vector>

#include "ribbon/break_divisor.hpp"
#include "ribbon/divisor.hpp"
#include "ribbon/graph.hpp"

namespace ribbon {

/// Per-graph tables shared by the torsor computations: S(G), B(G) with its
/// class lookup, and Pic^0(G). Built once, immutable afterwards.
class GraphContext {
 public:
  explicit GraphContext(RibbonGraph g);

  static std::shared_ptr<const GraphContext> make(RibbonGraph g) {
    return std::make_shared<const GraphContext>(std::move(g));
  }

  const RibbonGraph& graph() const { return graph_; }
  const std::vector<SpanningTree>& trees() const { return trees_; }
  const TreeIndex& tree_index() const { return tree_index_; }
  const BreakClassIndex& breaks() const { return breaks_; }
  const PicardGroup& picard() const { return picard_; }

 private:
  RibbonGraph graph_;
  std::vector<SpanningTree> trees_;
  TreeIndex tree_index_;
  BreakClassIndex breaks_;
  PicardGroup picard_;
};

/// A group action of Pic^0 on S(G) restricted to one class: entry i is the
/// index of the image of trees()[i].
using TreePermutation = std::vector<int>;

}  // namespace ribbon
