#include <doctest.h>

#include <random>
#include <set>

#include "ribbon/corpus.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/error.hpp"
#include "ribbon/io.hpp"

using namespace ribbon;

namespace {

RibbonGraph planar_k4() {
  for (auto& g : rotation_systems(complete_graph(4)))
    if (trace_faces(g).is_planar()) return g;
  FAIL("K4 has a planar rotation");
  return complete_graph(4);
}

}  // namespace

TEST_CASE("theta and the triangle are dual") {
  const DualCorrespondence theta = dual_graph(theta_graph());
  CHECK(theta.dual.num_vertices() == 3);
  CHECK(theta.dual.num_edges() == 3);
  CHECK(theta.dual.is_simple());
  CHECK(are_isomorphic(theta.dual, triangle_graph()));

  const DualCorrespondence k3 = dual_graph(triangle_graph());
  CHECK(k3.dual.num_vertices() == 2);
  CHECK(are_isomorphic(k3.dual, theta_graph()));
}

TEST_CASE("dual preconditions") {
  CHECK_THROWS_AS(dual_graph(path_graph(3)), HasBridge);
  const RibbonGraph torus =
      theta_graph().with_rotation({{0, 1, 2}, {0, 1, 2}});
  CHECK_THROWS_AS(dual_graph(torus), NotPlanar);
}

TEST_CASE("dual trees") {
  const RibbonGraph theta = theta_graph();
  const DualCorrespondence corr = dual_graph(theta);
  const SpanningTree s = dual_tree(corr, parse_tree(theta, "p"));
  CHECK(format_tree(corr.dual, s) == "q*,r*");
  std::set<SpanningTree> images;
  for (const auto& t : spanning_trees(theta)) images.insert(dual_tree(corr, t));
  CHECK(images.size() == 3);
}

TEST_CASE("dart map commutes with reversal and crosses faces") {
  for (const RibbonGraph& g : {theta_graph(), triangle_graph(), planar_k4(), banana_graph(4)}) {
    const DualCorrespondence corr = dual_graph(g);
    for (Dart d = 0; d < g.num_darts(); ++d) {
      const Dart star = corr.dart_map[d];
      CHECK(corr.dart_map[RibbonGraph::reverse(d)] == RibbonGraph::reverse(star));
      CHECK(corr.dual.dart_edge(star) == corr.edge_map[g.dart_edge(d)]);
      CHECK(corr.dual.head(star) == corr.face_map[corr.faces.face_of[d]]);
      CHECK(corr.dual.tail(star) == corr.face_map[corr.faces.face_of[RibbonGraph::reverse(d)]]);
    }
    CHECK(are_isomorphic(dual_graph(corr.dual).dual, g));
  }
}

TEST_CASE("chains and psi") {
  std::mt19937_64 rng(29);
  const RibbonGraph g = planar_k4();
  const DualCorrespondence corr = dual_graph(g);
  const PicardGroup pic(g);
  const PicardGroup dual_pic(corr.dual);
  CHECK(psi_class(corr, pic.zero()) == dual_pic.zero());
  std::set<DivisorClass> image;
  for (const auto& c : pic.elements()) {
    for (auto routing : {ChainRouting::kBreadthFirst, ChainRouting::kSearchTree})
      CHECK(chain_boundary(g, lift_to_chain(g, c.reduced, routing)) == c.reduced);
    std::uniform_int_distribution<int> value(-3, 3);
    std::vector<std::int64_t> f(4);
    for (auto& x : f) x = value(rng);
    const DivisorClass psi = psi_class(corr, c);
    CHECK(psi_divisor(corr, c.reduced + laplacian_of(g, f), ChainRouting::kSearchTree) == psi);
    for (const auto& a : pic.generators())
      CHECK(psi_class(corr, pic.add(a, c)) == dual_pic.add(psi_class(corr, a), psi));
    image.insert(psi);
  }
  CHECK(static_cast<std::int64_t>(image.size()) == pic.order());
  CHECK_THROWS_AS(lift_to_chain(g, Divisor::point(4, 0)), DegreeMismatch);
}

TEST_CASE("duality square on theta, K3 and planar K4") {
  for (const RibbonGraph& g : {theta_graph(), triangle_graph(), planar_k4()}) {
    const DualCorrespondence corr = dual_graph(g);
    const PicardGroup pic(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (const auto& c : pic.elements())
        for (const auto& t : spanning_trees(g)) CHECK(duality_square_check(corr, v, c, t));
      const DualitySquare square(GraphContext::make(g), v);
      for (int c = 0; c < pic.order(); ++c)
        for (int t = 0; t < static_cast<int>(square.primal().trees().size()); ++t)
          CHECK(square.commutes(c, t));
    }
  }
}

TEST_CASE("mirrored convention breaks the square") {
  const RibbonGraph k3 = triangle_graph();
  const DualitySquare square(GraphContext::make(k3), 0, DualConvention::mirror());
  int failures = 0;
  for (int c = 0; c < 3; ++c)
    for (int t = 0; t < 3; ++t) failures += !square.commutes(c, t);
  CHECK(failures > 0);
}

TEST_CASE("edge map sidecar") {
  const DualCorrespondence corr = dual_graph(theta_graph());
  CHECK(format_edge_map(corr) == "p p*\nq q*\nr r*\n");
}
