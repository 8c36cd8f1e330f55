#include "ribbon/lab.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include <json.hpp>

#include "ribbon/break_divisor.hpp"
#include "ribbon/error.hpp"
#include "ribbon/io.hpp"

namespace ribbon {

using nlohmann::json;

namespace {

json divisor_json(const RibbonGraph& g, const Divisor& d) {
  json out = json::object();
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (d[v] != 0) out[g.vertex_id(v)] = d[v];
  return out;
}

json witness_json(const GraphContext& context, const ActionWitness& w) {
  const RibbonGraph& g = context.graph();
  const auto& trees = context.trees();
  return {{"class", divisor_json(g, w.gamma.reduced)},
          {"tree", format_tree(g, trees[w.tree])},
          {"first", format_tree(g, trees[w.first])},
          {"second", format_tree(g, trees[w.second])}};
}

template <typename First, typename Second>
ActionComparison compare_actions(const GraphContext& context, const First& first,
                                 const Second& second) {
  ActionComparison result;
  const int trees = static_cast<int>(context.trees().size());
  for (const auto& gamma : context.picard().generators())
    for (int t = 0; t < trees; ++t) {
      const int a = first.act(gamma, t);
      const int b = second.act(gamma, t);
      if (a != b) {
        result.agree = false;
        result.witness = ActionWitness{gamma, t, a, b};
        return result;
      }
    }
  return result;
}

}  // namespace

ActionComparison compare_bernardi_vertices(const std::shared_ptr<const GraphContext>& context,
                                           Vertex v, Vertex w, InverseMethod inverse) {
  if (v == w) return {};
  const BernardiTorsor first(context, v, std::nullopt, inverse);
  const BernardiTorsor second(context, w, std::nullopt, inverse);
  return compare_actions(*context, first, second);
}

ActionComparison compare_torsors(const std::shared_ptr<const GraphContext>& context, Vertex v,
                                 InverseMethod inverse) {
  const BernardiTorsor bernardi(context, v, std::nullopt, inverse);
  const RotorTorsor rotor(context, v);
  return compare_actions(*context, bernardi, rotor);
}

bool SystemVerdict::agree_everywhere() const {
  return std::all_of(agrees.begin(), agrees.end(), [](bool b) { return b; });
}

SearchReport search_conjecture(const RibbonGraph& base, const SearchOptions& options) {
  if (!base.is_simple()) throw NotSimple("the conjecture concerns graphs without multiple edges");
  SearchReport report;
  std::int64_t index = 0;
  for_each_rotation_system(base, [&](RibbonGraph g) {
    SystemVerdict verdict;
    verdict.index = index++;
    verdict.rotation = g.rotations();
    verdict.genus = trace_faces(g).topological_genus;
    const auto context = GraphContext::make(std::move(g));
    for (Vertex v = 0; v < context->graph().num_vertices(); ++v) {
      const ActionComparison cmp = compare_torsors(context, v, options.inverse);
      verdict.agrees.push_back(cmp.agree);
      if (!cmp.agree && !verdict.distinguishing_vertex) {
        verdict.distinguishing_vertex = v;
        verdict.witness = cmp.witness;
      }
    }
    if (verdict.genus == 0 && !verdict.agree_everywhere())
      report.theorem_violations.push_back(verdict.index);
    if (verdict.genus > 0 && verdict.agree_everywhere())
      report.counterexamples.push_back(verdict.index);
    report.systems.push_back(std::move(verdict));
    return true;
  });
  return report;
}

std::string search_report_json(const RibbonGraph& base, const SearchReport& report) {
  std::string out;
  for (const auto& s : report.systems) {
    const RibbonGraph g = base.with_rotation(s.rotation);
    json rotation = json::object();
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      json list = json::array();
      for (Edge e : g.rotation(v)) list.push_back(g.edge_id(e));
      rotation[g.vertex_id(v)] = list;
    }
    json agrees = json::object();
    for (Vertex v = 0; v < g.num_vertices(); ++v) agrees[g.vertex_id(v)] = bool(s.agrees[v]);
    json record = {{"system", s.index}, {"genus", s.genus}, {"rotation", rotation},
                   {"agrees", agrees}};
    if (s.distinguishing_vertex) {
      const auto context = GraphContext::make(g);
      record["distinguishing"] = {{"vertex", g.vertex_id(*s.distinguishing_vertex)},
                                  {"witness", witness_json(*context, *s.witness)}};
    }
    if (s.genus == 0 && !s.agree_everywhere()) record["theorem_violation"] = true;
    if (s.genus > 0 && s.agree_everywhere()) record["counterexample"] = true;
    out += record.dump() + "\n";
  }
  json summary = {{"systems", report.systems.size()},
                  {"theorem_violations", report.theorem_violations},
                  {"counterexamples", report.counterexamples}};
  out += json{{"summary", summary}}.dump() + "\n";
  return out;
}

int SuiteReport::passed() const {
  return static_cast<int>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; }));
}

int SuiteReport::failed() const { return static_cast<int>(records.size()) - passed(); }

std::string SuiteReport::to_json_lines() const {
  std::string out;
  for (const auto& r : records) {
    json record = {{"check", r.check},
                   {"graph", r.graph},
                   {"params", json::parse(r.params)},
                   {"pass", r.pass},
                   {"witness", json::parse(r.witness)}};
    out += record.dump() + "\n";
  }
  json summary = {{"total", records.size()}, {"passed", passed()}, {"failed", failed()}};
  out += json{{"summary", summary}}.dump() + "\n";
  return out;
}

const std::vector<std::string>& suite_checks() {
  static const std::vector<std::string> names = {
      "counting",          "faces",
      "fundamental-cycle", "q-reduce",
      "picard-group",      "break-divisors",
      "tour",              "bijectivity",
      "edge-independence", "shift-formula",
      "bernardi-torsor",   "rotor-move",
      "rotor-torsor",      "vertex-independence",
      "torsor-agreement",  "dual-structure",
      "duality-square",    "unicycle-orbits",
      "reversibility",
  };
  return names;
}

namespace {

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class GraphChecks {
 public:
  GraphChecks(const CorpusEntry& entry, const SuiteOptions& options,
              std::vector<CheckRecord>& out)
      : entry_(entry),
        g_(entry.graph),
        options_(options),
        out_(out),
        rng_(options.seed ^ name_hash(entry.name)) {}

  void run() {
    context_ = GraphContext::make(g_);
    planar_ = trace_faces(g_).is_planar();
    guarded("counting", [&] { counting(); });
    guarded("faces", [&] { faces(); });
    guarded("fundamental-cycle", [&] { fundamental_cycles(); });
    guarded("q-reduce", [&] { q_reduce_checks(); });
    guarded("picard-group", [&] { picard_group(); });
    guarded("break-divisors", [&] { break_divisors(); });
    guarded("tour", [&] { tours(); });
    guarded("bijectivity", [&] { bijectivity(); });
    guarded("edge-independence", [&] { edge_independence(); });
    guarded("shift-formula", [&] { shift_formula(); });
    guarded("bernardi-torsor", [&] { bernardi_torsor(); });
    guarded("rotor-move", [&] { rotor_moves(); });
    guarded("rotor-torsor", [&] { rotor_torsor(); });
    guarded("vertex-independence", [&] { vertex_independence(); });
    guarded("torsor-agreement", [&] { torsor_agreement(); });
    guarded("dual-structure", [&] { dual_structure(); });
    guarded("duality-square", [&] { duality_square(); });
    guarded("unicycle-orbits", [&] { unicycle_orbits(); });
    guarded("reversibility", [&] { reversibility(); });
  }

 private:
  bool wanted(const std::string& check) const {
    return options_.only.empty() || options_.only.count(check) > 0;
  }

  void guarded(const std::string& check, const std::function<void()>& body) {
    if (!wanted(check)) return;
    try {
      body();
    } catch (const std::exception& e) {
      record(check, json::object(), false, {{"error", e.what()}});
    }
  }

  void record(const std::string& check, const json& params, bool pass,
              const json& witness = nullptr) {
    out_.push_back({check, entry_.name, params.dump(), pass, pass ? "null" : witness.dump()});
  }

  const std::string& vid(Vertex v) const { return g_.vertex_id(v); }
  const std::string& eid(Edge e) const { return g_.edge_id(e); }
  std::string tree_text(int index) const { return format_tree(g_, context_->trees()[index]); }
  json class_text(const DivisorClass& c) const { return divisor_json(g_, c.reduced); }

  Divisor random_divisor(int spread, bool degree_zero) {
    Divisor d(g_.num_vertices());
    std::uniform_int_distribution<int> coefficient(-spread, spread);
    for (Vertex v = 0; v < g_.num_vertices(); ++v) d[v] = coefficient(rng_);
    if (degree_zero) d[0] -= d.degree();
    return d;
  }

  Divisor random_principal() {
    std::vector<std::int64_t> f(g_.num_vertices());
    std::uniform_int_distribution<int> value(-3, 3);
    for (auto& x : f) x = value(rng_);
    return laplacian_of(g_, f);
  }

  // -- ribbon_core / divisor_algebra / break_divisors ----------------------

  void counting() {
    const auto trees = static_cast<std::int64_t>(context_->trees().size());
    const auto breaks = static_cast<std::int64_t>(context_->breaks().divisors().size());
    const std::int64_t pic = context_->picard().order();
    const std::int64_t det = laplacian_minor_determinant(g_);
    const json counts = {{"trees", trees}, {"break_divisors", breaks}, {"picard", pic},
                         {"determinant", det}};
    record("counting", counts, trees == breaks && breaks == pic && pic == det, counts);
  }

  void faces() {
    const FaceDecomposition f = trace_faces(g_);
    std::vector<int> hits(g_.num_darts(), 0);
    std::size_t total = 0;
    for (const auto& face : f.faces) {
      total += face.size();
      for (Dart d : face) ++hits[d];
      Dart d = face.front();
      for (std::size_t i = 0; i < face.size(); ++i) d = g_.face_next(d);
      if (d != face.front()) {
        record("faces", json::object(), false, {{"face_not_closed", face.front()}});
        return;
      }
    }
    const bool partition = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    const int face_count = g_.num_edges() == 0 ? 1 : static_cast<int>(f.faces.size());
    const int euler = g_.num_vertices() - g_.num_edges() + face_count;
    const bool euler_ok = euler % 2 == 0 && euler == 2 - 2 * f.topological_genus &&
                          f.topological_genus >= 0;
    const json params = {{"faces", face_count}, {"genus", f.topological_genus}};
    record("faces", params,
           partition && euler_ok && total == static_cast<std::size_t>(g_.num_darts()), params);
  }

  void fundamental_cycles() {
    for (const auto& t : context_->trees())
      for (Edge e = 0; e < g_.num_edges(); ++e) {
        if (t.contains(e)) continue;
        const auto cycle = fundamental_cycle(g_, t, e);
        bool ok = g_.dart_edge(cycle.front()) == e;
        for (std::size_t i = 1; i < cycle.size(); ++i) ok = ok && t.contains(g_.dart_edge(cycle[i]));
        try {
          validate_cycle(g_, cycle);
        } catch (const NotACycle&) {
          ok = false;
        }
        if (!ok) {
          record("fundamental-cycle", json::object(), false,
                 {{"tree", format_tree(g_, t)}, {"edge", eid(e)}});
          return;
        }
      }
    record("fundamental-cycle", json::object(), true);
  }

  void q_reduce_checks() {
    const Vertex q = kClassBase;
    for (int trial = 0; trial < 25; ++trial) {
      const Divisor d = random_divisor(6, false);
      const Divisor shifted = d + random_principal();
      const Divisor reduced = q_reduce(g_, d, q);
      const bool ok = is_q_reduced(g_, reduced, q) && q_reduce(g_, reduced, q) == reduced &&
                      q_reduce(g_, shifted, q) == reduced && reduced.degree() == d.degree() &&
                      are_equivalent(g_, d, shifted) &&
                      q_reduce(g_, random_principal(), q) == q_reduce(g_, Divisor(g_.num_vertices()), q);
      if (!ok) {
        record("q-reduce", json::object(), false,
               {{"divisor", divisor_json(g_, d)}, {"shifted", divisor_json(g_, shifted)}});
        return;
      }
    }
    record("q-reduce", {{"trials", 25}}, true);
  }

  void picard_group() {
    const PicardGroup& pic = context_->picard();
    const auto& elements = pic.elements();
    const int n = static_cast<int>(elements.size());
    const DivisorClass zero = pic.zero();
    const bool exhaustive = n <= 36;
    const std::vector<DivisorClass> left = exhaustive ? elements : pic.generators();
    for (const auto& a : left)
      for (const auto& b : elements) {
        bool ok = pic.add(a, b) == pic.add(b, a) && pic.add(a, zero) == a &&
                  pic.add(a, pic.negate(a)) == zero && pic.index_of(pic.add(a, b)) >= 0;
        if (exhaustive)
          for (const auto& c : elements)
            ok = ok && pic.add(pic.add(a, b), c) == pic.add(a, pic.add(b, c));
        if (!ok) {
          record("picard-group", json::object(), false,
                 {{"a", class_text(a)}, {"b", class_text(b)}});
          return;
        }
      }
    // Translation by each generator permutes the degree-g classes.
    const auto& breaks = context_->breaks().divisors();
    for (const auto& gamma : pic.generators()) {
      std::set<Divisor> image;
      for (const auto& b : breaks) image.insert(class_of(g_, b.divisor + gamma.reduced).reduced);
      if (image.size() != breaks.size()) {
        record("picard-group", json::object(), false, {{"translation", class_text(gamma)}});
        return;
      }
    }
    record("picard-group", {{"order", n}, {"exhaustive", exhaustive}}, true);
  }

  void break_divisors() {
    const auto& breaks = context_->breaks().divisors();
    const int genus = g_.genus();
    for (const auto& b : breaks) {
      const bool ok = b.witness && is_compatible(g_, b.divisor, *b.witness) &&
                      satisfies_subgraph_bounds(g_, b.divisor) &&
                      context_->breaks().representative(class_of(g_, b.divisor)).divisor == b.divisor;
      if (!ok) {
        record("break-divisors", json::object(), false, {{"divisor", divisor_json(g_, b.divisor)}});
        return;
      }
    }
    // Cross-check the enumeration against the subgraph-bound oracle.
    int bounded = 0;
    Divisor d(g_.num_vertices());
    std::function<bool(Vertex, int)> place = [&](Vertex v, int left) -> bool {
      if (v == g_.num_vertices() - 1) {
        d[v] = left;
        const bool by_bounds = satisfies_subgraph_bounds(g_, d);
        const bool listed = context_->breaks().index_of_divisor(d) >= 0;
        if (by_bounds) ++bounded;
        if (by_bounds != listed) {
          record("break-divisors", json::object(), false,
                 {{"divisor", divisor_json(g_, d)}, {"subgraph_bounds", by_bounds}, {"listed", listed}});
          return false;
        }
        return true;
      }
      for (int k = 0; k <= left; ++k) {
        d[v] = k;
        if (!place(v + 1, left - k)) return false;
      }
      return true;
    };
    if (!place(0, genus)) return;
    const json params = {{"count", breaks.size()}, {"by_subgraph_bounds", bounded}};
    record("break-divisors", params,
           bounded == static_cast<int>(breaks.size()) &&
               breaks.size() == context_->trees().size(),
           params);
  }

  // -- bernardi --------------------------------------------------------------

  std::vector<std::pair<Vertex, Edge>> seeds() const {
    std::vector<std::pair<Vertex, Edge>> out;
    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      for (Edge e : g_.rotation(v)) out.emplace_back(v, e);
    return out;
  }

  void tours() {
    const auto all = seeds();
    if (all.empty()) {
      record("tour", json::object(), true);
      return;
    }
    for (const auto& t : context_->trees()) {
      const Tour base = bernardi_tour(g_, all.front().first, all.front().second, t);
      std::vector<TourStep> doubled = base.steps;
      doubled.insert(doubled.end(), base.steps.begin(), base.steps.end());
      for (const auto& [v, e] : all) {
        const Tour tour = bernardi_tour(g_, v, e, t);
        std::vector<std::set<Vertex>> walked(g_.num_edges()), cut(g_.num_edges());
        std::vector<int> walks(g_.num_edges(), 0), cuts(g_.num_edges(), 0);
        std::vector<Vertex> first_cut(g_.num_edges(), -1);
        for (const auto& step : tour.steps) {
          if (step.kind == StepKind::kWalk) {
            ++walks[step.edge];
            walked[step.edge].insert(step.at);
          } else {
            ++cuts[step.edge];
            cut[step.edge].insert(step.at);
            if (first_cut[step.edge] < 0) first_cut[step.edge] = step.at;
          }
        }
        bool ok = static_cast<int>(tour.steps.size()) == g_.num_darts() &&
                  tour.steps.front().at == v && tour.steps.front().edge == e;
        for (Edge f = 0; f < g_.num_edges(); ++f) {
          if (t.contains(f)) ok = ok && walks[f] == 2 && walked[f].size() == 2 && cuts[f] == 0;
          else ok = ok && cuts[f] == 2 && cut[f].size() == 2 && walks[f] == 0 &&
                    tour.eta[f] == first_cut[f];
        }
        ok = ok && std::search(doubled.begin(), doubled.end(), tour.steps.begin(),
                               tour.steps.end()) != doubled.end();
        if (!ok) {
          record("tour", json::object(), false,
                 {{"vertex", vid(v)}, {"edge", eid(e)}, {"tree", format_tree(g_, t)}});
          return;
        }
      }
    }
    record("tour", {{"seeds", all.size()}}, true);
  }

  void bijectivity() {
    const auto& trees = context_->trees();
    const auto& breaks = context_->breaks();
    for (const auto& [v, e] : seeds()) {
      const json params = {{"vertex", vid(v)}, {"edge", eid(e)}};
      auto fail = [&](json witness) {
        witness["vertex"] = vid(v);
        witness["edge"] = eid(e);
        record("bijectivity", params, false, witness);
      };
      std::vector<int> beta(trees.size());
      std::vector<bool> hit(breaks.divisors().size(), false);
      bool ok = true;
      for (std::size_t i = 0; i < trees.size() && ok; ++i) {
        const Divisor d = bernardi_beta(g_, v, e, trees[i]).divisor;
        beta[i] = breaks.index_of_divisor(d);
        if (beta[i] < 0 || hit[beta[i]]) {
          fail({{"tree", tree_text(static_cast<int>(i))}, {"beta", divisor_json(g_, d)},
                {"reason", beta[i] < 0 ? "not a break divisor" : "not injective"}});
          ok = false;
        } else {
          hit[beta[i]] = true;
        }
      }
      if (!ok) continue;
      std::vector<int> left(breaks.divisors().size());
      for (std::size_t b = 0; b < breaks.divisors().size() && ok; ++b) {
        const Divisor& d = breaks.divisors()[b].divisor;
        try {
          const SpanningTree right = alpha_right(g_, v, e, d);
          const SpanningTree l = alpha_left(g_, v, e, d);
          left[b] = context_->tree_index().at(l);
          if (bernardi_beta(g_, v, e, right).divisor != d || !(l == right)) {
            fail({{"divisor", divisor_json(g_, d)}, {"alpha_right", format_tree(g_, right)},
                  {"alpha_left", format_tree(g_, l)}});
            ok = false;
          }
        } catch (const Error& err) {
          fail({{"divisor", divisor_json(g_, d)}, {"error", err.what()}});
          ok = false;
        }
      }
      for (std::size_t i = 0; i < trees.size() && ok; ++i)
        if (left[beta[i]] != static_cast<int>(i)) {
          fail({{"tree", tree_text(static_cast<int>(i))}, {"reason", "alpha_left(beta(T)) != T"}});
          ok = false;
        }
      if (ok) record("bijectivity", params, true);
    }
  }

  // Tables built from the forward map; valid once bijectivity has passed.
  const BernardiTorsor& bernardi(Vertex v) {
    auto it = bernardi_.find(v);
    if (it == bernardi_.end())
      it = bernardi_.emplace(v, BernardiTorsor(context_, v, std::nullopt, InverseMethod::kForwardTable))
               .first;
    return it->second;
  }

  const RotorTorsor& rotor(Vertex v) {
    auto it = rotor_.find(v);
    if (it == rotor_.end()) it = rotor_.emplace(v, RotorTorsor(context_, v)).first;
    return it->second;
  }

  void edge_independence() {
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      const json params = {{"vertex", vid(v)}};
      const BernardiTorsor& base = bernardi(v);
      bool ok = true;
      for (Edge e : g_.rotation(v)) {
        const BernardiTorsor other(context_, v, e, InverseMethod::kForwardTable);
        const ActionComparison cmp = compare_actions(*context_, base, other);
        if (!cmp.agree) {
          json w = witness_json(*context_, *cmp.witness);
          w["vertex"] = vid(v);
          w["edge"] = eid(e);
          record("edge-independence", params, false, w);
          ok = false;
          break;
        }
      }
      if (ok) record("edge-independence", params, true);
    }
  }

  void shift_formula() {
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      const json params = {{"vertex", vid(v)}};
      bool ok = true;
      for (Edge e1 : g_.rotation(v))
        for (Edge e2 : g_.rotation(v))
          for (const auto& t : context_->trees()) {
            if (!ok) break;
            const ShiftCheck check = shift_difference_check(g_, v, e1, e2, t);
            if (!check.equal) {
              record("shift-formula", params, false,
                     {{"vertex", vid(v)}, {"e1", eid(e1)}, {"e2", eid(e2)},
                      {"tree", format_tree(g_, t)}, {"lhs", divisor_json(g_, check.lhs)},
                      {"rhs", divisor_json(g_, check.rhs)}});
              ok = false;
            }
          }
      if (ok) record("shift-formula", params, true);
    }
  }

  template <typename Action>
  std::optional<json> torsor_axioms(const Action& action) {
    const PicardGroup& pic = context_->picard();
    const auto& elements = pic.elements();
    const int trees = static_cast<int>(context_->trees().size());
    const DivisorClass zero = pic.zero();
    for (int t = 0; t < trees; ++t)
      if (action.act(zero, t) != t) return json{{"axiom", "identity"}, {"tree", tree_text(t)}};
    for (const auto& a : pic.generators())
      for (const auto& b : elements)
        for (int t = 0; t < trees; ++t)
          if (action.act(pic.add(a, b), t) != action.act(a, action.act(b, t)))
            return json{{"axiom", "additivity"}, {"a", class_text(a)}, {"b", class_text(b)},
                        {"tree", tree_text(t)}};
    for (int t = 0; t < trees; ++t) {
      std::vector<bool> reached(trees, false);
      for (const auto& c : elements) reached[action.act(c, t)] = true;
      if (std::count(reached.begin(), reached.end(), false) > 0)
        return json{{"axiom", "simple transitivity"}, {"tree", tree_text(t)}};
    }
    return std::nullopt;
  }

  void bernardi_torsor() {
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      const json params = {{"vertex", vid(v)}};
      const auto failure = torsor_axioms(bernardi(v));
      record("bernardi-torsor", params, !failure, failure.value_or(nullptr));
    }
  }

  void rotor_moves() {
    const auto& trees = context_->trees();
    for (Vertex x = 0; x < g_.num_vertices(); ++x)
      for (Vertex y = 0; y < g_.num_vertices(); ++y)
        for (const auto& t : trees) {
          const SpanningTree out = rotor_move(g_, t, x, y);
          if (!is_spanning_tree(g_, out.edges()) || (x == y && !(out == t))) {
            record("rotor-move", json::object(), false,
                   {{"from", vid(x)}, {"root", vid(y)}, {"tree", format_tree(g_, t)}});
            return;
          }
        }
    record("rotor-move", json::object(), true);
  }

  void rotor_torsor() {
    const auto& pic = context_->picard();
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      const json params = {{"vertex", vid(v)}};
      const RotorTorsor& action = rotor(v);
      std::optional<json> failure = torsor_axioms(action);
      const int trees = static_cast<int>(context_->trees().size());
      for (int trial = 0; trial < 8 && !failure; ++trial) {
        const Divisor d = random_divisor(4, true);
        const Divisor shifted = d + random_principal();
        const DivisorClass gamma = class_of(g_, d);
        for (int t = 0; t < trees && !failure; ++t) {
          if (action.act_divisor(d, t) != action.act_divisor(shifted, t))
            failure = json{{"property", "representative independence"},
                           {"divisor", divisor_json(g_, d)},
                           {"shifted", divisor_json(g_, shifted)},
                           {"tree", tree_text(t)}};
          else if (action.act(pic.negate(gamma), action.act(gamma, t)) != t)
            failure = json{{"property", "inverse"}, {"class", class_text(gamma)},
                           {"tree", tree_text(t)}};
        }
      }
      record("rotor-torsor", params, !failure, failure.value_or(nullptr));
    }
  }

  // -- comparisons -------------------------------------------------------------

  void vertex_independence() {
    std::optional<std::pair<Vertex, ActionComparison>> differing;
    for (Vertex v = 1; v < g_.num_vertices() && !differing; ++v) {
      ActionComparison cmp = compare_actions(*context_, bernardi(0), bernardi(v));
      if (!cmp.agree) differing.emplace(v, std::move(cmp));
    }
    json params = {{"planar", planar_}};
    if (differing) {
      json w = witness_json(*context_, *differing->second.witness);
      w["vertices"] = {vid(0), vid(differing->first)};
      params["distinguishing"] = w;
    }
    const bool pass = planar_ != differing.has_value();
    record("vertex-independence", params, pass,
           differing ? params["distinguishing"] : json{{"reason", "no vertex pair differs"}});
  }

  void torsor_agreement() {
    json differing = json::array();
    std::optional<json> first;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      const ActionComparison cmp = compare_actions(*context_, bernardi(v), rotor(v));
      if (!cmp.agree) {
        differing.push_back(vid(v));
        if (!first) {
          first = witness_json(*context_, *cmp.witness);
          (*first)["vertex"] = vid(v);
        }
      }
    }
    json params = {{"planar", planar_}, {"differing_vertices", differing}};
    if (first && !planar_) params["witness"] = *first;
    // Only the planar direction is a theorem; other systems are data.
    record("torsor-agreement", params, !planar_ || differing.empty(), first.value_or(nullptr));
  }

  // -- duality -------------------------------------------------------------------

  bool dualizable() const { return planar_ && bridges(g_).empty(); }

  void dual_structure() {
    if (!dualizable()) {
      bool raised = false;
      try {
        dual_graph(g_, options_.dual);
      } catch (const NotPlanar&) {
        raised = !planar_;
      } catch (const HasBridge&) {
        raised = planar_;
      }
      record("dual-structure", {{"dualizable", false}}, raised,
             {{"reason", "expected NotPlanar or HasBridge"}});
      return;
    }
    const DualCorrespondence corr = dual_graph(g_, options_.dual);
    const auto dual = GraphContext::make(corr.dual);
    const FaceDecomposition faces = trace_faces(g_);
    std::vector<std::string> problems;
    if (corr.dual.num_vertices() != static_cast<int>(faces.faces.size()))
      problems.push_back("dual vertex count");
    if (corr.dual.num_edges() != g_.num_edges()) problems.push_back("dual edge count");
    if (!trace_faces(corr.dual).is_planar()) problems.push_back("dual genus");
    for (Dart d = 0; d < g_.num_darts(); ++d)
      if (corr.dart_map[RibbonGraph::reverse(d)] != RibbonGraph::reverse(corr.dart_map[d]))
        problems.push_back("dart map reversal");
    std::set<int> sigma;
    for (const auto& t : context_->trees()) {
      const SpanningTree s = dual_tree(corr, t);
      if (s.size() != g_.genus() || s.size() != corr.dual.num_vertices() - 1)
        problems.push_back("dual tree size");
      sigma.insert(dual->tree_index().at(s));
    }
    if (sigma.size() != context_->trees().size()) problems.push_back("sigma not bijective");
    const DualCorrespondence twice = dual_graph(corr.dual, options_.dual);
    if (!are_isomorphic(twice.dual, g_)) problems.push_back("double dual");

    const PicardGroup& pic = context_->picard();
    const PicardGroup& dual_pic = dual->picard();
    std::set<int> image;
    for (const auto& c : pic.elements()) {
      const DivisorClass psi = psi_class(corr, c);
      image.insert(dual_pic.index_of(psi));
      if (psi_class(corr, c, ChainRouting::kSearchTree) != psi ||
          psi_divisor(corr, c.reduced + random_principal()) != psi)
        problems.push_back("psi depends on the lift");
      for (const auto& a : pic.generators())
        if (psi_class(corr, pic.add(a, c)) != dual_pic.add(psi_class(corr, a), psi))
          problems.push_back("psi not additive");
    }
    if (image.size() != pic.elements().size() || image.count(-1) > 0 ||
        dual_pic.order() != pic.order())
      problems.push_back("psi not bijective");
    std::sort(problems.begin(), problems.end());
    problems.erase(std::unique(problems.begin(), problems.end()), problems.end());
    const json params = {{"dual_vertices", corr.dual.num_vertices()}};
    record("dual-structure", params, problems.empty(), {{"problems", problems}});
  }

  void duality_square() {
    if (!dualizable()) return;
    const auto& pic = context_->picard();
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      const json params = {{"vertex", vid(v)}};
      const DualitySquare square(context_, v, options_.dual);
      std::optional<json> failure;
      for (int a = 0; a < pic.order() && !failure; ++a)
        for (int t = 0; t < static_cast<int>(context_->trees().size()) && !failure; ++t)
          if (!square.commutes(a, t))
            failure = json{{"vertex", vid(v)},
                           {"class", class_text(pic.elements()[a])},
                           {"tree", tree_text(t)}};
      record("duality-square", params, !failure, failure.value_or(nullptr));
    }
  }

  // -- rotor mechanics -----------------------------------------------------------

  void unicycle_orbits() {
    const auto cycles = directed_cycles(g_);
    for (const auto& cycle : cycles)
      for (auto construction :
           {UnicycleConstruction::kBreadthFirst, UnicycleConstruction::kDepthFirst}) {
        const UnicycleState start = unicycle_on_cycle(g_, cycle, construction);
        const UnicycleOrbit orbit = unicycle_orbit(g_, start);
        if (!is_unicycle(g_, start) || orbit.period != g_.num_darts() || !orbit.each_dart_once) {
          record("unicycle-orbits", json::object(), false,
                 {{"cycle", format_darts(g_, cycle)}, {"period", orbit.period},
                  {"each_dart_once", orbit.each_dart_once}});
          return;
        }
      }
    record("unicycle-orbits", {{"cycles", cycles.size()}}, true);
  }

  void reversibility() {
    const auto cycles = directed_cycles(g_);
    std::optional<std::string> irreversible;
    for (const auto& cycle : cycles) {
      const bool first = cycle_is_reversible(g_, cycle, UnicycleConstruction::kBreadthFirst);
      const bool second = cycle_is_reversible(g_, cycle, UnicycleConstruction::kDepthFirst);
      if (first != second) {
        record("reversibility", json::object(), false,
               {{"cycle", format_darts(g_, cycle)}, {"reason", "constructions disagree"}});
        return;
      }
      if (!first && !irreversible) irreversible = format_darts(g_, cycle);
    }
    json params = {{"planar", planar_}, {"cycles", cycles.size()}};
    if (irreversible) params["irreversible"] = *irreversible;
    record("reversibility", params, planar_ != irreversible.has_value(), params);
  }

  const CorpusEntry& entry_;
  const RibbonGraph& g_;
  const SuiteOptions& options_;
  std::vector<CheckRecord>& out_;
  std::mt19937_64 rng_;
  std::shared_ptr<const GraphContext> context_;
  bool planar_ = false;
  std::map<Vertex, BernardiTorsor> bernardi_;
  std::map<Vertex, RotorTorsor> rotor_;
};

}  // namespace

SuiteReport run_theorem_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options) {
  std::vector<std::vector<CheckRecord>> results(corpus.size());
  auto work = [&](std::size_t i) { GraphChecks(corpus[i], options, results[i]).run(); };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) work(i);
      });
    for (auto& th : pool) th.join();
  }
  SuiteReport report;
  for (auto& r : results)
    report.records.insert(report.records.end(), std::make_move_iterator(r.begin()),
                          std::make_move_iterator(r.end()));
  return report;
}

}  // namespace ribbon
