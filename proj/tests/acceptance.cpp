// Acceptance run over the default corpus. Prints one line per criterion and
// exits non-zero if any criterion fails or exceeds its time limit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "ribbon/bernardi.hpp"
#include "ribbon/corpus.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/io.hpp"
#include "ribbon/lab.hpp"
#include "ribbon/rotor.hpp"

using namespace ribbon;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

using Contexts = std::vector<std::pair<std::string, std::shared_ptr<const GraphContext>>>;

const Contexts& corpus() {
  static const Contexts contexts = [] {
    Contexts out;
    for (auto& entry : default_corpus())
      out.emplace_back(entry.name, GraphContext::make(std::move(entry.graph)));
    return out;
  }();
  return contexts;
}

bool is_planar(const RibbonGraph& g) { return trace_faces(g).is_planar(); }

bool in_family(const std::string& name, const char* prefix) { return name.rfind(prefix, 0) == 0; }

Outcome counting() {
  Outcome out;
  for (const auto& [name, ctx] : corpus()) {
    const auto trees = static_cast<std::int64_t>(ctx->trees().size());
    const auto breaks = static_cast<std::int64_t>(ctx->breaks().divisors().size());
    const std::int64_t det = laplacian_minor_determinant(ctx->graph());
    if (trees != breaks || breaks != ctx->picard().order() || trees != det) out.fail(name);
  }
  return out;
}

Outcome bijectivity() {
  Outcome out;
  for (const auto& [name, ctx] : corpus()) {
    const RibbonGraph& g = ctx->graph();
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      for (Edge e : g.rotation(v)) {
        const std::string where = name + " at " + g.vertex_id(v) + "/" + g.edge_id(e);
        for (const auto& b : ctx->breaks().divisors()) {
          const SpanningTree right = alpha_right(g, v, e, b.divisor);
          if (bernardi_beta(g, v, e, right).divisor != b.divisor) out.fail(where + " beta.alpha_R");
          if (!(alpha_left(g, v, e, b.divisor) == right)) out.fail(where + " alpha_L != alpha_R");
        }
        for (const auto& t : ctx->trees())
          if (!(alpha_left(g, v, e, bernardi_beta(g, v, e, t).divisor) == t))
            out.fail(where + " alpha_L.beta");
      }
  }
  return out;
}

Outcome edge_independence() {
  Outcome out;
  for (const auto& [name, ctx] : corpus()) {
    const RibbonGraph& g = ctx->graph();
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::optional<std::vector<TreePermutation>> first;
      for (Edge e : g.rotation(v)) {
        const BernardiTorsor torsor(ctx, v, e, InverseMethod::kForwardTable);
        std::vector<TreePermutation> perms;
        for (const auto& gamma : ctx->picard().generators()) perms.push_back(torsor.permutation(gamma));
        if (!first) first = perms;
        else if (*first != perms) out.fail(name + " at " + g.vertex_id(v));
        for (Edge other : g.rotation(v))
          for (const auto& t : ctx->trees())
            if (!shift_difference_check(g, v, e, other, t).equal)
              out.fail(name + " shift at " + g.vertex_id(v));
      }
    }
  }
  return out;
}

Outcome planarity_dichotomy() {
  Outcome out;
  int planar = 0, distinguished = 0;
  for (const auto& [name, ctx] : corpus()) {
    if (!in_family(name, "theta-") && !in_family(name, "k4-")) continue;
    bool all_equal = true;
    for (Vertex w = 1; w < ctx->graph().num_vertices() && all_equal; ++w) {
      const ActionComparison cmp = compare_bernardi_vertices(ctx, 0, w);
      if (!cmp.agree && !cmp.witness) out.fail(name + " differs without a witness");
      all_equal = cmp.agree;
    }
    if (is_planar(ctx->graph())) {
      ++planar;
      if (!all_equal) out.fail(name + " planar but vertex-dependent");
    } else {
      distinguished += !all_equal;
      if (all_equal) out.fail(name + " non-planar but vertex-independent");
    }
  }
  out.note = std::to_string(planar) + " planar, " + std::to_string(distinguished) +
             " non-planar distinguished" + (out.pass ? "" : "; " + out.note);
  return out;
}

Outcome torsor_agreement() {
  Outcome out;
  int checked = 0;
  for (const auto& [name, ctx] : corpus()) {
    if (!is_planar(ctx->graph())) continue;
    ++checked;
    for (Vertex v = 0; v < ctx->graph().num_vertices(); ++v)
      if (!compare_torsors(ctx, v).agree) out.fail(name + " at " + ctx->graph().vertex_id(v));
  }
  if (out.pass) out.note = std::to_string(checked) + " planar graphs";
  return out;
}

Outcome non_planar_divergence() {
  Outcome out;
  const SearchReport report = search_conjecture(complete_graph(4));
  int genus_one = 0, diverging = 0;
  for (const auto& s : report.systems) {
    if (s.genus == 0) continue;
    ++genus_one;
    if (!s.agree_everywhere()) ++diverging;
  }
  if (!report.ok()) out.fail("a genus-0 system disagrees");
  if (diverging == 0) out.fail("no diverging genus-1 system");
  if (out.pass)
    out.note = std::to_string(diverging) + "/" + std::to_string(genus_one) +
               " genus-1 systems diverge, " + std::to_string(report.counterexamples.size()) +
               " conjecture counterexamples";
  return out;
}

Outcome duality() {
  Outcome out;
  int graphs = 0;
  for (const auto& [name, ctx] : corpus()) {
    const bool family = in_family(name, "theta-") || name == "triangle" ||
                        in_family(name, "k4-") || in_family(name, "random-planar-");
    if (!family || !is_planar(ctx->graph()) || !bridges(ctx->graph()).empty()) continue;
    ++graphs;
    for (Vertex v = 0; v < ctx->graph().num_vertices(); ++v) {
      const DualitySquare square(ctx, v);
      for (int c = 0; c < ctx->picard().order(); ++c)
        for (int t = 0; t < static_cast<int>(ctx->trees().size()); ++t)
          if (!square.commutes(c, t)) out.fail(name + " at " + ctx->graph().vertex_id(v));
    }
  }
  if (!are_isomorphic(dual_graph(theta_graph()).dual, triangle_graph())) out.fail("dual(theta)");
  if (!are_isomorphic(dual_graph(triangle_graph()).dual, theta_graph())) out.fail("dual(K3)");
  if (out.pass) out.note = std::to_string(graphs) + " graphs";
  return out;
}

Outcome rotor_mechanics() {
  Outcome out;
  for (const auto& [name, ctx] : corpus()) {
    if (!in_family(name, "theta-") && !in_family(name, "k4-")) continue;
    const RibbonGraph& g = ctx->graph();
    bool all_reversible = true;
    for (const auto& cycle : directed_cycles(g)) {
      const UnicycleOrbit orbit = unicycle_orbit(g, unicycle_on_cycle(g, cycle));
      if (orbit.period != g.num_darts() || !orbit.each_dart_once)
        out.fail(name + " orbit " + format_darts(g, cycle));
      all_reversible = all_reversible && cycle_is_reversible(g, cycle);
    }
    if (all_reversible != is_planar(g)) out.fail(name + " reversibility");
  }
  return out;
}

Outcome property_suites() {
  Outcome out;
  SuiteOptions options;
  options.only = {"bernardi-torsor", "rotor-torsor", "q-reduce"};
  std::vector<CorpusEntry> entries;
  for (const auto& [name, ctx] : corpus()) entries.push_back({name, ctx->graph()});
  const SuiteReport report = run_theorem_suite(entries, options);
  for (const auto& r : report.records)
    if (!r.pass) out.fail(r.check + " on " + r.graph);
  if (out.pass) out.note = std::to_string(report.passed()) + " records";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  // An optional argument restricts the run to one criterion.
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  struct Criterion {
    int number;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "counting", 10, counting},
      {2, "bijectivity", 60, bijectivity},
      {3, "edge independence and shift formula", 60, edge_independence},
      {4, "planarity dichotomy", 120, planarity_dichotomy},
      {5, "torsor agreement on planar graphs", 120, torsor_agreement},
      {6, "non-planar divergence on K4", 120, non_planar_divergence},
      {7, "duality square", 60, duality},
      {8, "rotor mechanics", 120, rotor_mechanics},
      {9, "property suites", 120, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.number != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit) outcome.fail("over the " + std::to_string(int(c.limit)) + " s limit");
    failed += !outcome.pass;
    std::printf("criterion %d: %s (%.2f s, limit %.0f s) %s%s%s\n", c.number,
                outcome.pass ? "PASS" : "FAIL", seconds, c.limit, c.name,
                outcome.note.empty() ? "" : " - ", outcome.note.c_str());
  }
  return failed == 0 ? 0 : 1;
}
