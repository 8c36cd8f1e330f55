#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon {

struct CorpusEntry {
  std::string name;
  RibbonGraph graph;
};

/// Builds a ribbon graph from edge endpoint pairs given by vertex index;
/// vertices are named "1".."n", edges by `edge_names` (or "e1".."em").
RibbonGraph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& ends,
                       const std::vector<std::vector<Edge>>& rotation,
                       std::vector<std::string> edge_names = {});

/// Rotation lists in edge file order at every vertex.
std::vector<std::vector<Edge>> file_order_rotation(int num_vertices,
                                                   const std::vector<std::pair<int, int>>& ends);

RibbonGraph single_edge_graph();
RibbonGraph path_graph(int num_vertices);
/// Vertices 1,2,3, edges a=12, b=23, c=13, rotation 1:(a,c) 2:(b,a) 3:(c,b).
RibbonGraph triangle_graph();
/// Vertices u,v, edges p,q,r; planar rotation u:(p,q,r) v:(r,q,p).
RibbonGraph theta_graph();
/// Two vertices joined by `edges` parallel edges, planar rotation.
RibbonGraph banana_graph(int edges);
RibbonGraph complete_graph(int n);
RibbonGraph complete_bipartite_graph(int a, int b);

/// Number of rotation systems: product over vertices of (deg - 1)!.
std::int64_t rotation_system_count(const RibbonGraph& g);

/// Visits every rotation system once. Each rotation keeps the first edge of
/// the given list fixed and permutes the rest lexicographically; the first
/// vertex varies slowest. Stops early when `visit` returns false.
void for_each_rotation_system(const RibbonGraph& g,
                              const std::function<bool(RibbonGraph)>& visit);

std::vector<RibbonGraph> rotation_systems(const RibbonGraph& g);

struct RandomGraphOptions {
  int max_vertices = 6;
  int max_edges = 10;
  /// Grow a plane map (always genus 0) instead of shuffling rotations.
  bool planar = false;
  /// Planar maps only: allow pendant vertices, which create bridges.
  bool allow_bridges = false;
};

/// A random connected loopless multigraph with its rotation system.
RibbonGraph random_ribbon_graph(std::uint64_t seed, const RandomGraphOptions& options);

/// The fixed default corpus: single edge, P3, K3, all theta and K4 rotation
/// systems, the 4-edge banana, K5 and K3,3 in file order, and 10 seeded
/// random multigraphs (5 planar by construction).
std::vector<CorpusEntry> default_corpus();

}  // namespace ribbon
