// torsor-lab: command line front end for the ribbon torsor library.
//
// Exit codes: 0 success, 1 a check failed (or two actions differ),
// 2 bad input.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ribbon/bernardi.hpp"
#include "ribbon/corpus.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/error.hpp"
#include "ribbon/io.hpp"
#include "ribbon/lab.hpp"
#include "ribbon/rotor.hpp"

namespace fs = std::filesystem;
using namespace ribbon;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Args {
  std::string file;
  std::string vertex;
  std::string other;
  std::string edge;
  std::string tree;
  std::string divisor;
  std::string klass;
  std::string from;
  std::string root;
  std::string cycle;
  std::string output;
  std::string kind = "tour";
  std::string construction = "bfs";
  std::vector<std::string> only;
  bool mirror_dual = false;
  bool trace = false;
  int jobs = 1;
  std::uint64_t seed = 7;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

DualConvention convention(const Args& a) {
  return a.mirror_dual ? DualConvention::mirror() : DualConvention::standard();
}

DivisorClass parse_class(const RibbonGraph& g, const std::string& text) {
  const Divisor d = parse_divisor(g, text);
  if (d.degree() != 0) throw DegreeMismatch("--class must have degree 0");
  return class_of(g, d);
}

std::string comparison_text(const GraphContext& context, const ActionComparison& cmp) {
  if (cmp.agree) return "agree\n";
  const RibbonGraph& g = context.graph();
  const auto& w = *cmp.witness;
  const auto& trees = context.trees();
  json out = {{"class", json::parse(serialize_divisor(g, w.gamma.reduced))},
              {"tree", format_tree(g, trees[w.tree])},
              {"first", format_tree(g, trees[w.first])},
              {"second", format_tree(g, trees[w.second])}};
  return "differ " + out.dump() + "\n";
}

int cmd_info(const Args& a) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  const FaceDecomposition f = trace_faces(g);
  json out = {{"vertices", g.num_vertices()},
              {"edges", g.num_edges()},
              {"combinatorial_genus", g.genus()},
              {"topological_genus", f.topological_genus},
              {"faces", g.num_edges() == 0 ? 1 : static_cast<int>(f.faces.size())},
              {"planar", f.is_planar()},
              {"simple", g.is_simple()}};
  std::cout << out.dump() << "\n";
  return kOk;
}

int cmd_trees(const Args& a) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  for (const auto& t : spanning_trees(g)) std::cout << format_tree(g, t) << "\n";
  return kOk;
}

int cmd_break_divisors(const Args& a) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  for (const auto& b : enumerate_break_divisors(g))
    std::cout << serialize_divisor(g, b.divisor) << "\n";
  return kOk;
}

int cmd_tour(const Args& a) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  const Tour tour = bernardi_tour(g, g.vertex(a.vertex), g.edge(a.edge), parse_tree(g, a.tree));
  std::cout << format_tour(g, tour);
  return kOk;
}

int cmd_beta(const Args& a) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  const BreakDivisor b = bernardi_beta(g, g.vertex(a.vertex), g.edge(a.edge), parse_tree(g, a.tree));
  std::cout << serialize_divisor(g, b.divisor) << "\n";
  return kOk;
}

int cmd_alpha(const Args& a, bool right) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  const Divisor d = parse_divisor(g, a.divisor);
  const Vertex v = g.vertex(a.vertex);
  const Edge e = g.edge(a.edge);
  const SpanningTree t = right ? alpha_right(g, v, e, d) : alpha_left(g, v, e, d);
  std::cout << format_tree(g, t) << "\n";
  return kOk;
}

int cmd_act(const Args& a, bool rotor) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  const DivisorClass gamma = parse_class(g, a.klass);
  const SpanningTree t = parse_tree(g, a.tree);
  const Vertex v = g.vertex(a.vertex);
  const SpanningTree out = rotor ? rotor_act(g, v, gamma, t) : bernardi_act(g, v, gamma, t);
  std::cout << format_tree(g, out) << "\n";
  return kOk;
}

int cmd_rotor_move(const Args& a) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  std::vector<RotorTraceStep> trace;
  const SpanningTree out =
      rotor_move(g, parse_tree(g, a.tree), g.vertex(a.from), g.vertex(a.root), &trace);
  if (a.trace) std::cout << format_rotor_trace(g, trace);
  std::cout << format_tree(g, out) << "\n";
  return kOk;
}

UnicycleConstruction construction(const Args& a) {
  return a.construction == "dfs" ? UnicycleConstruction::kDepthFirst
                                 : UnicycleConstruction::kBreadthFirst;
}

int cmd_reversible(const Args& a) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  const auto cycle = parse_darts(g, a.cycle);
  validate_cycle(g, cycle);
  std::cout << (cycle_is_reversible(g, cycle, construction(a)) ? "reversible" : "irreversible")
            << "\n";
  return kOk;
}

int cmd_dual(const Args& a) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  const DualCorrespondence corr = dual_graph(g, convention(a));
  if (a.output.empty()) {
    std::cout << serialize_ribbon_graph(corr.dual);
    std::cerr << format_edge_map(corr);
  } else {
    write_text(a.output, serialize_ribbon_graph(corr.dual));
    write_text(a.output + ".edgemap", format_edge_map(corr));
  }
  return kOk;
}

int cmd_dual_class(const Args& a) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  const DualCorrespondence corr = dual_graph(g, convention(a));
  const DivisorClass psi = psi_class(corr, parse_class(g, a.klass));
  std::cout << serialize_divisor(corr.dual, psi.reduced) << "\n";
  return kOk;
}

int cmd_check_square(const Args& a) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  const auto context = GraphContext::make(g);
  std::vector<Vertex> vertices;
  if (a.vertex.empty())
    for (Vertex v = 0; v < g.num_vertices(); ++v) vertices.push_back(v);
  else
    vertices.push_back(g.vertex(a.vertex));

  std::vector<int> elements, trees;
  if (!a.klass.empty())
    elements.push_back(context->picard().index_of(parse_class(g, a.klass)));
  else
    for (int i = 0; i < context->picard().order(); ++i) elements.push_back(i);
  if (!a.tree.empty())
    trees.push_back(context->tree_index().at(parse_tree(g, a.tree)));
  else
    for (int i = 0; i < static_cast<int>(context->trees().size()); ++i) trees.push_back(i);

  for (Vertex v : vertices) {
    const DualitySquare square(context, v, convention(a));
    for (int c : elements)
      for (int t : trees)
        if (!square.commutes(c, t)) {
          json w = {{"vertex", g.vertex_id(v)},
                    {"class", json::parse(serialize_divisor(
                                  g, context->picard().elements()[c].reduced))},
                    {"tree", format_tree(g, context->trees()[t])}};
          std::cout << "fails " << w.dump() << "\n";
          return kCheckFailed;
        }
  }
  std::cout << "commutes\n";
  return kOk;
}

int cmd_compare_vertices(const Args& a) {
  const auto context = GraphContext::make(read_ribbon_graph(a.file));
  const RibbonGraph& g = context->graph();
  const ActionComparison cmp =
      compare_bernardi_vertices(context, g.vertex(a.vertex), g.vertex(a.other));
  std::cout << comparison_text(*context, cmp);
  return cmp.agree ? kOk : kCheckFailed;
}

int cmd_compare_torsors(const Args& a) {
  const auto context = GraphContext::make(read_ribbon_graph(a.file));
  const ActionComparison cmp = compare_torsors(context, context->graph().vertex(a.vertex));
  std::cout << comparison_text(*context, cmp);
  return cmp.agree ? kOk : kCheckFailed;
}

std::vector<CorpusEntry> read_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw ParseError("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> corpus;
  for (const auto& f : files) {
    try {
      corpus.push_back({f.stem().string(), read_ribbon_graph(f.string())});
    } catch (const Error& e) {
      throw ParseError(f.filename().string() + ": " + e.what());
    }
  }
  return corpus;
}

int cmd_suite(const Args& a) {
  SuiteOptions options;
  options.dual = convention(a);
  options.jobs = a.jobs;
  options.seed = a.seed;
  for (const auto& name : a.only) {
    const auto& known = suite_checks();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw ParseError("unknown check '" + name + "'");
    options.only.insert(name);
  }
  const SuiteReport report = run_theorem_suite(read_corpus(a.file), options);
  write_text(a.output, report.to_json_lines());
  std::cerr << report.passed() << " passed, " << report.failed() << " failed\n";
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_search(const Args& a) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  const SearchReport report = search_conjecture(g);
  write_text(a.output, search_report_json(g, report));
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_export_dot(const Args& a) {
  const RibbonGraph g = read_ribbon_graph(a.file);
  const SpanningTree t = parse_tree(g, a.tree);
  if (a.kind == "tour") {
    const Tour tour = bernardi_tour(g, g.vertex(a.vertex), g.edge(a.edge), t);
    write_text(a.output, tour_to_dot(g, t, tour));
  } else {
    std::vector<RotorTraceStep> trace;
    const SpanningTree after = rotor_move(g, t, g.vertex(a.from), g.vertex(a.root), &trace);
    write_text(a.output, rotor_trace_to_dot(g, t, after, trace));
  }
  return kOk;
}

int cmd_gen_corpus(const Args& a) {
  fs::create_directories(a.file);
  for (const auto& entry : default_corpus())
    write_text((fs::path(a.file) / (entry.name + ".json")).string(),
               serialize_ribbon_graph(entry.graph));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisors, spanning trees and torsors on ribbon graphs"};
  app.require_subcommand(1);
  Args a;
  std::function<int()> action;

  auto command = [&](const char* name, const char* help, std::function<int()> run,
                     const char* file_help = "graph file (JSON)") {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", a.file, file_help)->required();
    sub->callback([&action, run] { action = run; });
    return sub;
  };
  auto seed_flags = [&](CLI::App* sub) {
    sub->add_option("--vertex", a.vertex, "start vertex")->required();
    sub->add_option("--edge", a.edge, "start edge at the vertex")->required();
  };

  command("info", "vertex, edge, genus and face counts", [&] { return cmd_info(a); });
  command("trees", "list spanning trees", [&] { return cmd_trees(a); });
  command("break-divisors", "list break divisors", [&] { return cmd_break_divisors(a); });

  auto* tour = command("tour", "walk/cut tour of a tree", [&] { return cmd_tour(a); });
  seed_flags(tour);
  tour->add_option("--tree", a.tree, "tree edges, comma separated")->required();

  auto* beta = command("beta", "Bernardi divisor of a tree", [&] { return cmd_beta(a); });
  seed_flags(beta);
  beta->add_option("--tree", a.tree, "tree edges, comma separated")->required();

  for (bool right : {true, false}) {
    auto* sub = command(right ? "alpha-r" : "alpha-l", "tree with the given break divisor",
                        [&, right] { return cmd_alpha(a, right); });
    seed_flags(sub);
    sub->add_option("--divisor", a.divisor, "break divisor JSON")->required();
  }

  for (bool rotor : {false, true}) {
    auto* sub = command(rotor ? "act-rotor" : "act-bernardi", "act on a tree by a degree-0 class",
                        [&, rotor] { return cmd_act(a, rotor); });
    sub->add_option("--vertex", a.vertex, "base vertex")->required();
    sub->add_option("--class", a.klass, "degree-0 divisor JSON")->required();
    sub->add_option("--tree", a.tree, "tree edges, comma separated")->required();
  }

  auto* move = command("rotor-move", "route one chip through the tree rotors",
                       [&] { return cmd_rotor_move(a); });
  move->add_option("--from", a.from, "chip vertex")->required();
  move->add_option("--root", a.root, "sink")->required();
  move->add_option("--tree", a.tree, "tree edges, comma separated")->required();
  move->add_flag("--trace", a.trace, "print every rotor step");

  auto* rev = command("reversible", "is a directed cycle reversible under rotor routing",
                      [&] { return cmd_reversible(a); });
  rev->add_option("--cycle", a.cycle, "darts tail:edge, comma separated")->required();
  rev->add_option("--construction", a.construction, "bfs or dfs")
      ->check(CLI::IsMember({"bfs", "dfs"}));

  auto* dual = command("dual", "dual ribbon graph with an edge map", [&] { return cmd_dual(a); });
  dual->add_option("-o,--output", a.output, "write here plus <output>.edgemap");
  dual->add_flag("--mirror-dual", a.mirror_dual, "use the mirrored convention (debug)");

  auto* dual_class = command("dual-class", "image of a class in the dual Picard group",
                             [&] { return cmd_dual_class(a); });
  dual_class->add_option("--class", a.klass, "degree-0 divisor JSON")->required();
  dual_class->add_flag("--mirror-dual", a.mirror_dual, "use the mirrored convention (debug)");

  auto* square = command("check-square", "duality square over classes and trees",
                         [&] { return cmd_check_square(a); });
  square->add_option("--vertex", a.vertex, "primal base vertex (default: all)");
  square->add_option("--class", a.klass, "single class (default: all)");
  square->add_option("--tree", a.tree, "single tree (default: all)");
  square->add_flag("--mirror-dual", a.mirror_dual, "use the mirrored convention (debug)");

  auto* cv = command("compare-vertices", "Bernardi actions at two base vertices",
                     [&] { return cmd_compare_vertices(a); });
  cv->add_option("--vertex", a.vertex, "first vertex")->required();
  cv->add_option("--other", a.other, "second vertex")->required();

  auto* ct = command("compare-torsors", "Bernardi against rotor routing at a vertex",
                     [&] { return cmd_compare_torsors(a); });
  ct->add_option("--vertex", a.vertex, "base vertex")->required();

  auto* suite = command("suite", "run every check on a corpus directory",
                        [&] { return cmd_suite(a); }, "directory of graph files");
  suite->add_option("-o,--output", a.output, "report path (default stdout)");
  suite->add_option("-j,--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
  suite->add_option("--seed", a.seed, "seed for randomized checks");
  suite->add_option("--only", a.only, "run only these checks");
  suite->add_flag("--mirror-dual", a.mirror_dual, "use the mirrored dual convention (debug)");

  auto* search = command("search", "compare torsors over every rotation system",
                         [&] { return cmd_search(a); }, "simple graph file");
  search->add_option("-o,--output", a.output, "report path (default stdout)");

  auto* dot = command("export-dot", "tour or rotor trace as Graphviz",
                      [&] { return cmd_export_dot(a); });
  dot->add_option("--kind", a.kind, "tour or rotor")->check(CLI::IsMember({"tour", "rotor"}));
  dot->add_option("--vertex", a.vertex, "tour start vertex");
  dot->add_option("--edge", a.edge, "tour start edge");
  dot->add_option("--from", a.from, "rotor chip vertex");
  dot->add_option("--root", a.root, "rotor sink");
  dot->add_option("--tree", a.tree, "tree edges, comma separated")->required();
  dot->add_option("-o,--output", a.output, "output path (default stdout)");

  command("gen-corpus", "write the default corpus", [&] { return cmd_gen_corpus(a); },
          "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
