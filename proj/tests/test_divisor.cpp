#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ribbon/corpus.hpp"
#include "ribbon/divisor.hpp"
#include "ribbon/error.hpp"
#include "ribbon/io.hpp"

using namespace ribbon;

namespace {

Divisor random_divisor(std::mt19937_64& rng, int n, int spread) {
  std::uniform_int_distribution<int> coefficient(-spread, spread);
  Divisor d(n);
  for (Vertex v = 0; v < n; ++v) d[v] = coefficient(rng);
  return d;
}

std::vector<std::int64_t> random_function(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> value(-4, 4);
  std::vector<std::int64_t> f(n);
  for (auto& x : f) x = value(rng);
  return f;
}

}  // namespace

TEST_CASE("laplacian examples") {
  const RibbonGraph k3 = triangle_graph();
  const std::vector<std::int64_t> constant(3, 7);
  CHECK(laplacian_of(k3, constant).is_zero());
  const std::vector<std::int64_t> indicator{1, 0, 0};
  CHECK(laplacian_of(k3, indicator) == Divisor({2, -1, -1}));
  const std::vector<std::int64_t> at_u{1, 0};
  CHECK(laplacian_of(theta_graph(), at_u) == Divisor({3, -3}));
  CHECK_THROWS_AS(laplacian_of(k3, at_u), MissingVertex);
}

TEST_CASE("q_reduce against the firing-set definition") {
  std::mt19937_64 rng(11);
  for (const auto& entry : default_corpus()) {
    const RibbonGraph& g = entry.graph;
    CAPTURE(entry.name);
    for (int trial = 0; trial < 6; ++trial) {
      const Divisor d = random_divisor(rng, g.num_vertices(), 5);
      for (Vertex q = 0; q < g.num_vertices(); ++q) {
        const Divisor r = q_reduce(g, d, q);
        CHECK(oracle::is_q_reduced(g, r.chips(), q));
        CHECK(is_q_reduced(g, r, q));
        CHECK(q_reduce(g, r, q) == r);
        CHECK(r.degree() == d.degree());
        CHECK(q_reduce(g, d + laplacian_of(g, random_function(rng, g.num_vertices())), q) == r);
      }
    }
  }
}

TEST_CASE("principal divisors reduce like zero") {
  std::mt19937_64 rng(3);
  const RibbonGraph g = complete_graph(4);
  const Divisor zero(4);
  for (int trial = 0; trial < 20; ++trial)
    for (Vertex q = 0; q < 4; ++q)
      CHECK(q_reduce(g, laplacian_of(g, random_function(rng, 4)), q) == q_reduce(g, zero, q));
}

TEST_CASE("K3 reduction of (2) - (3)") {
  const RibbonGraph k3 = triangle_graph();
  const Divisor d({0, 1, -1});
  const Divisor r = q_reduce(k3, d, 0);
  CHECK(oracle::is_q_reduced(k3, r.chips(), 0));
  CHECK(oracle::equivalent_in_box(k3, d.chips(), r.chips(), 3));
  CHECK(q_reduce(k3, r, 0) == r);
}

TEST_CASE("equivalence agrees with a bounded search") {
  std::mt19937_64 rng(5);
  const RibbonGraph k3 = triangle_graph();
  CHECK(are_equivalent(k3, Divisor::point(3, 0), Divisor::point(3, 1)) ==
        oracle::equivalent_in_box(k3, Divisor::point(3, 0).chips(), Divisor::point(3, 1).chips(), 3));
  for (const RibbonGraph& g : {triangle_graph(), theta_graph(), banana_graph(4)}) {
    const Divisor d = random_divisor(rng, g.num_vertices(), 3);
    CHECK(are_equivalent(g, d, d));
    for (int trial = 0; trial < 100; ++trial) {
      const Divisor shifted = d + laplacian_of(g, random_function(rng, g.num_vertices()));
      CHECK(are_equivalent(g, d, shifted));
      const Divisor other = random_divisor(rng, g.num_vertices(), 2);
      if (other.degree() == d.degree())
        CHECK(are_equivalent(g, d, other) ==
              oracle::equivalent_in_box(g, d.chips(), other.chips(), 6));
    }
  }
}

TEST_CASE("picard group orders and laws") {
  CHECK(PicardGroup(single_edge_graph()).order() == 1);
  CHECK(PicardGroup(triangle_graph()).order() == 3);
  CHECK(PicardGroup(theta_graph()).order() == 3);
  for (const auto& entry : default_corpus()) {
    const RibbonGraph& g = entry.graph;
    CAPTURE(entry.name);
    const PicardGroup pic(g);
    CHECK(pic.order() == oracle::reduced_laplacian_determinant(g));
    CHECK(static_cast<int>(pic.generators().size()) == g.num_vertices() - 1);
    for (const auto& a : pic.generators()) {
      CHECK(pic.multiply(pic.order(), a) == pic.zero());
      CHECK(pic.add(a, pic.negate(a)) == pic.zero());
      for (const auto& b : pic.elements()) CHECK(pic.add(a, b) == pic.add(b, a));
    }
  }
}

TEST_CASE("generators span the group") {
  for (const RibbonGraph& g : {theta_graph(), complete_graph(4), complete_bipartite_graph(2, 3)}) {
    const PicardGroup pic(g);
    std::set<DivisorClass> reached{pic.zero()};
    std::vector<DivisorClass> frontier{pic.zero()};
    while (!frontier.empty()) {
      const DivisorClass c = frontier.back();
      frontier.pop_back();
      for (const auto& gen : pic.generators())
        if (reached.insert(pic.add(c, gen)).second) frontier.push_back(pic.add(c, gen));
    }
    CHECK(static_cast<std::int64_t>(reached.size()) == pic.order());
  }
}

TEST_CASE("divisor JSON") {
  const RibbonGraph theta = theta_graph();
  CHECK(parse_divisor(theta, R"({"u": 2})") == Divisor({2, 0}));
  CHECK(parse_divisor(theta, serialize_divisor(theta, Divisor({-3, 5}))) == Divisor({-3, 5}));
  CHECK_THROWS_AS(parse_divisor(theta, R"({"w": 1})"), MissingVertex);
  CHECK_THROWS_AS(parse_divisor(theta, R"({"u": 2000000})"), ParseError);
  CHECK_THROWS_AS(parse_divisor(theta, R"({"u": 1.5})"), ParseError);
}
