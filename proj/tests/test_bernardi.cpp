#include <doctest.h>

#include "oracles.hpp"
#include "ribbon/bernardi.hpp"
#include "ribbon/corpus.hpp"
#include "ribbon/error.hpp"
#include "ribbon/io.hpp"

using namespace ribbon;

namespace {

std::vector<oracle::Step> as_steps(const Tour& tour) {
  std::vector<oracle::Step> out;
  for (const auto& s : tour.steps) out.push_back({s.at, s.edge, s.kind == StepKind::kWalk});
  return out;
}

bool small(const CorpusEntry& entry) { return entry.name != "k5"; }

}  // namespace

TEST_CASE("tour of a single edge") {
  const RibbonGraph g = single_edge_graph();
  const Tour tour = bernardi_tour(g, 0, 0, parse_tree(g, "e1"));
  REQUIRE(tour.steps.size() == 2);
  CHECK(tour.steps[0] == TourStep{0, 0, StepKind::kWalk});
  CHECK(tour.steps[1] == TourStep{1, 0, StepKind::kWalk});
  CHECK(tour.eta[0] == -1);
}

TEST_CASE("tour on K3 and theta by step simulation") {
  const RibbonGraph k3 = triangle_graph();
  const SpanningTree ab = parse_tree(k3, "a,b");
  const Tour tour = bernardi_tour(k3, k3.vertex("1"), k3.edge("a"), ab);
  CHECK(tour.steps.size() == 6);
  CHECK(as_steps(tour) == oracle::tour(k3, 0, k3.edge("a"), ab.edges()));
  // 1 -a-> 2, then b from 2 to 3, then c is cut at 3.
  CHECK(tour.eta[k3.edge("c")] == k3.vertex("3"));

  const RibbonGraph theta = theta_graph();
  const Tour t = bernardi_tour(theta, 0, theta.edge("p"), parse_tree(theta, "p"));
  CHECK(t.steps.size() == 6);
  CHECK(t.eta[theta.edge("q")] >= 0);
  CHECK(t.eta[theta.edge("r")] >= 0);
}

TEST_CASE("tours and beta against the simulation oracle") {
  for (const auto& entry : default_corpus()) {
    if (!small(entry)) continue;
    const RibbonGraph& g = entry.graph;
    CAPTURE(entry.name);
    for (const auto& t : spanning_trees(g))
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Edge e : g.rotation(v)) {
          CHECK(as_steps(bernardi_tour(g, v, e, t)) == oracle::tour(g, v, e, t.edges()));
          CHECK(bernardi_beta(g, v, e, t).divisor.chips() ==
                oracle::bernardi_divisor(g, v, e, t.edges()));
        }
  }
}

TEST_CASE("beta is onto the break divisors") {
  const RibbonGraph k3 = triangle_graph();
  std::set<Divisor> images;
  for (const auto& t : spanning_trees(k3)) images.insert(bernardi_beta(k3, 0, 0, t).divisor);
  CHECK(images == std::set<Divisor>{Divisor::point(3, 0), Divisor::point(3, 1), Divisor::point(3, 2)});

  const RibbonGraph theta = theta_graph();
  std::set<oracle::Chips> theta_images;
  for (const auto& t : spanning_trees(theta))
    theta_images.insert(bernardi_beta(theta, 0, 0, t).divisor.chips());
  CHECK(theta_images == oracle::break_divisors(theta));

  const RibbonGraph path = path_graph(3);
  CHECK(bernardi_beta(path, 1, 0, parse_tree(path, "e1,e2")).divisor.is_zero());
}

TEST_CASE("alpha inverts beta") {
  for (const auto& entry : default_corpus()) {
    if (!small(entry)) continue;
    const RibbonGraph& g = entry.graph;
    CAPTURE(entry.name);
    const auto trees = spanning_trees(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const Edge e = g.rotation(v).front();
      for (const auto& t : trees) {
        const Divisor d = bernardi_beta(g, v, e, t).divisor;
        CHECK(alpha_right(g, v, e, d) == t);
        CHECK(alpha_left(g, v, e, d) == t);
      }
    }
  }
}

TEST_CASE("alpha on a tree graph and bad input") {
  const RibbonGraph path = path_graph(3);
  CHECK(alpha_right(path, 0, 0, Divisor(3)).size() == 2);
  CHECK(alpha_left(path, 0, 0, Divisor(3)).size() == 2);
  const RibbonGraph theta = theta_graph();
  CHECK_THROWS_AS(alpha_right(theta, 0, 0, Divisor({3, -1})), NotBreakDivisor);
  CHECK_THROWS_AS(alpha_right(theta, 0, 0, Divisor({1, 0})), DegreeMismatch);
  const RibbonGraph k3 = triangle_graph();
  CHECK_THROWS_AS(bernardi_tour(k3, k3.vertex("1"), k3.edge("b"), parse_tree(k3, "a,b")),
                  NotIncident);
}

TEST_CASE("alpha picks the tree with the requested divisor on theta") {
  const RibbonGraph theta = theta_graph();
  const Divisor two_u({2, 0});
  const SpanningTree t = alpha_right(theta, 0, theta.edge("p"), two_u);
  CHECK(bernardi_beta(theta, 0, theta.edge("p"), t).divisor == two_u);
}

TEST_CASE("bernardi action basics") {
  const RibbonGraph theta = theta_graph();
  const PicardGroup pic(theta);
  const DivisorClass gamma = class_of(theta, Divisor({1, -1}));
  for (const auto& t : spanning_trees(theta)) {
    CHECK(bernardi_act(theta, 0, pic.zero(), t) == t);
    SpanningTree s = t;
    for (int i = 0; i < 3; ++i) s = bernardi_act(theta, 0, gamma, s);
    CHECK(s == t);
    CHECK_FALSE(bernardi_act(theta, 0, gamma, t) == t);
  }
  CHECK_THROWS_AS(bernardi_act(theta, 0, class_of(theta, Divisor({1, 0})), spanning_trees(theta)[0]),
                  DegreeMismatch);
}

TEST_CASE("tabulated torsor matches the direct action") {
  const auto context = GraphContext::make(complete_graph(4));
  const RibbonGraph& g = context->graph();
  for (Vertex v = 0; v < 4; ++v) {
    const BernardiTorsor right(context, v);
    const BernardiTorsor left(context, v, std::nullopt, InverseMethod::kAlphaLeft);
    const BernardiTorsor table(context, v, std::nullopt, InverseMethod::kForwardTable);
    for (const auto& gamma : context->picard().generators())
      for (int t = 0; t < static_cast<int>(context->trees().size()); ++t) {
        const int expected =
            context->tree_index().at(bernardi_act(g, v, gamma, context->trees()[t]));
        CHECK(right.act(gamma, t) == expected);
        CHECK(left.act(gamma, t) == expected);
        CHECK(table.act(gamma, t) == expected);
      }
  }
}

TEST_CASE("shift difference") {
  const RibbonGraph theta = theta_graph();
  for (const auto& t : spanning_trees(theta)) {
    const ShiftCheck same = shift_difference_check(theta, 0, 0, 0, t);
    CHECK(same.equal);
    CHECK(same.lhs.is_zero());
    CHECK(same.rhs.is_zero());
    CHECK(shift_difference_check(theta, 0, theta.edge("p"), theta.edge("q"), t).equal);
  }
  const RibbonGraph path = path_graph(3);
  const ShiftCheck leaf = shift_difference_check(path, 0, 0, 0, parse_tree(path, "e1,e2"));
  CHECK(leaf.lhs.is_zero());
  CHECK(leaf.rhs.is_zero());
  for (const auto& entry : default_corpus()) {
    if (!small(entry)) continue;
    const RibbonGraph& g = entry.graph;
    CAPTURE(entry.name);
    for (const auto& t : spanning_trees(g))
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Edge e1 : g.rotation(v))
          for (Edge e2 : g.rotation(v)) {
            const ShiftCheck check = shift_difference_check(g, v, e1, e2, t);
            const Divisor direct = bernardi_beta(g, v, e1, t).divisor -
                                   bernardi_beta(g, v, e2, t).divisor;
            CHECK(check.lhs == direct);
            CHECK(check.equal);
          }
  }
}

TEST_CASE("vertex split partitions the other vertices") {
  const RibbonGraph g = complete_graph(4);
  for (const auto& t : spanning_trees(g))
    for (Vertex v = 0; v < 4; ++v)
      for (Edge e1 : g.rotation(v))
        for (Edge e2 : g.rotation(v)) {
          const VertexSplit split = vertex_split(g, v, e1, e2, t);
          CHECK(split.arc_i.size() + split.arc_j.size() == 3);
          for (Vertex w = 0; w < 4; ++w)
            CHECK((w == v ? 0 : 1) == int(split.in_a[w]) + int(split.in_b[w]));
        }
}
