#include <doctest.h>

#include "ribbon/corpus.hpp"
#include "ribbon/error.hpp"
#include "ribbon/lab.hpp"

using namespace ribbon;

TEST_CASE("vertex comparison on theta") {
  for (const auto& g : rotation_systems(theta_graph())) {
    const auto context = GraphContext::make(g);
    CHECK(compare_bernardi_vertices(context, 0, 0).agree);
    const ActionComparison cmp = compare_bernardi_vertices(context, 0, 1);
    CHECK(cmp.agree == trace_faces(g).is_planar());
    if (!cmp.agree) {
      REQUIRE(cmp.witness);
      CHECK(cmp.witness->first != cmp.witness->second);
    }
  }
}

TEST_CASE("torsor comparison") {
  const auto tree = GraphContext::make(path_graph(3));
  for (Vertex v = 0; v < 3; ++v) CHECK(compare_torsors(tree, v).agree);
  const auto k3 = GraphContext::make(triangle_graph());
  for (Vertex v = 0; v < 3; ++v) CHECK(compare_torsors(k3, v).agree);
}

TEST_CASE("search over K3 and K4") {
  const SearchReport k3 = search_conjecture(triangle_graph());
  REQUIRE(k3.systems.size() == 1);
  CHECK(k3.systems[0].agree_everywhere());
  CHECK(k3.ok());

  const SearchReport k4 = search_conjecture(complete_graph(4));
  CHECK(k4.systems.size() == 16);
  CHECK(k4.ok());
  bool diverges = false;
  for (const auto& s : k4.systems)
    if (s.genus > 0 && !s.agree_everywhere()) diverges = true;
  CHECK(diverges);
  CHECK_THROWS_AS(search_conjecture(theta_graph()), NotSimple);
}

TEST_CASE("suite report") {
  CHECK(run_theorem_suite({}).ok());
  CHECK(run_theorem_suite({}).records.empty());

  const std::vector<CorpusEntry> corpus{{"theta", theta_graph()}, {"k3", triangle_graph()}};
  const SuiteReport report = run_theorem_suite(corpus);
  CHECK(report.ok());
  CHECK(report.passed() > 0);
  SuiteOptions parallel;
  parallel.jobs = 4;
  CHECK(run_theorem_suite(corpus, parallel).to_json_lines() == report.to_json_lines());

  SuiteOptions mirror;
  mirror.dual = DualConvention::mirror();
  const SuiteReport broken = run_theorem_suite(corpus, mirror);
  CHECK_FALSE(broken.ok());
  for (const auto& r : broken.records)
    if (!r.pass) {
      CHECK(r.check == "duality-square");
      CHECK(r.witness != "null");
    }
}

TEST_CASE("suite filter") {
  SuiteOptions options;
  options.only = {"counting"};
  const SuiteReport report = run_theorem_suite({{"k4", complete_graph(4)}}, options);
  REQUIRE(report.records.size() == 1);
  CHECK(report.records[0].check == "counting");
  CHECK(report.records[0].pass);
}
