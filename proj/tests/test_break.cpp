#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ribbon/break_divisor.hpp"
#include "ribbon/corpus.hpp"
#include "ribbon/error.hpp"
#include "ribbon/io.hpp"

using namespace ribbon;

TEST_CASE("compatibility examples") {
  const RibbonGraph theta = theta_graph();
  const SpanningTree p = parse_tree(theta, "p");
  const auto assignment = compatible_assignment(theta, Divisor({1, 1}), p);
  REQUIRE(assignment);
  CHECK((*assignment)[theta.edge("p")] == -1);
  CHECK((*assignment)[theta.edge("q")] != (*assignment)[theta.edge("r")]);

  const RibbonGraph k3 = triangle_graph();
  CHECK_FALSE(is_compatible(k3, Divisor::point(3, 1), parse_tree(k3, "a,b")));
  CHECK(is_compatible(k3, Divisor::point(3, 0), parse_tree(k3, "a,b")));
  CHECK(is_compatible(path_graph(3), Divisor(3), parse_tree(path_graph(3), "e1,e2")));
  CHECK_THROWS_AS(compatible_assignment(k3, Divisor({1, 1, 0}), parse_tree(k3, "a,b")),
                  DegreeMismatch);
}

TEST_CASE("break divisor membership") {
  const RibbonGraph theta = theta_graph();
  CHECK(is_break_divisor(theta, Divisor({2, 0})));
  CHECK_FALSE(is_break_divisor(theta, Divisor({2, 1})));
  CHECK_FALSE(is_break_divisor(theta, Divisor({3, -1})));
  const RibbonGraph k3 = triangle_graph();
  for (Vertex v = 0; v < 3; ++v) CHECK(is_break_divisor(k3, Divisor::point(3, v)));
}

TEST_CASE("enumeration matches trees times orientations") {
  CHECK(enumerate_break_divisors(single_edge_graph()).size() == 1);
  const auto theta = enumerate_break_divisors(theta_graph());
  REQUIRE(theta.size() == 3);
  CHECK(theta[0].divisor == Divisor({0, 2}));
  CHECK(theta[1].divisor == Divisor({1, 1}));
  CHECK(theta[2].divisor == Divisor({2, 0}));

  for (const auto& entry : default_corpus()) {
    const RibbonGraph& g = entry.graph;
    CAPTURE(entry.name);
    const auto breaks = enumerate_break_divisors(g);
    std::set<oracle::Chips> found;
    for (const auto& b : breaks) {
      found.insert(b.divisor.chips());
      REQUIRE(b.witness);
      CHECK(is_compatible(g, b.divisor, *b.witness));
      CHECK(satisfies_subgraph_bounds(g, b.divisor));
    }
    CHECK(found == oracle::break_divisors(g));
    CHECK(static_cast<std::int64_t>(breaks.size()) == oracle::reduced_laplacian_determinant(g));
  }
}

TEST_CASE("one break divisor per class") {
  std::mt19937_64 rng(17);
  for (const auto& entry : default_corpus()) {
    const RibbonGraph& g = entry.graph;
    CAPTURE(entry.name);
    const BreakClassIndex index(g);
    std::set<Divisor> classes;
    for (const auto& b : index.divisors()) classes.insert(class_of(g, b.divisor).reduced);
    CHECK(classes.size() == index.divisors().size());
    for (const auto& b : index.divisors()) {
      std::uniform_int_distribution<int> value(-3, 3);
      std::vector<std::int64_t> f(g.num_vertices());
      for (auto& x : f) x = value(rng);
      const Divisor shifted = b.divisor + laplacian_of(g, f);
      CHECK(index.representative(class_of(g, shifted)).divisor == b.divisor);
      CHECK(break_representative(g, class_of(g, shifted)).divisor == b.divisor);
    }
  }
}

TEST_CASE("representative needs degree g") {
  const RibbonGraph theta = theta_graph();
  CHECK_THROWS_AS(break_representative(theta, class_of(theta, Divisor({1, 0}))), DegreeMismatch);
}
