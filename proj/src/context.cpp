#include "ribbon/context.hpp"

namespace ribbon {

GraphContext::GraphContext(RibbonGraph g)
    : graph_(std::move(g)),
      trees_(spanning_trees(graph_)),
      tree_index_(trees_),
      breaks_(graph_),
      picard_(graph_) {}

}  // namespace ribbon
