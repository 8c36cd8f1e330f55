#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ribbon/bernardi.hpp"
#include "ribbon/context.hpp"
#include "ribbon/corpus.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/rotor.hpp"

namespace ribbon {

/// A generator class and tree on which two actions disagree, with the two
/// image tree indices.
struct ActionWitness {
  DivisorClass gamma;
  int tree = 0;
  int first = 0;
  int second = 0;
};

struct ActionComparison {
  bool agree = true;
  std::optional<ActionWitness> witness;
};

/// beta_v against beta_w on every generator [(u) - (q)] and every tree.
ActionComparison compare_bernardi_vertices(const std::shared_ptr<const GraphContext>& context,
                                           Vertex v, Vertex w,
                                           InverseMethod inverse = InverseMethod::kAlphaRight);

/// beta_v against r_v on every generator and every tree.
ActionComparison compare_torsors(const std::shared_ptr<const GraphContext>& context, Vertex v,
                                 InverseMethod inverse = InverseMethod::kAlphaRight);

struct SystemVerdict {
  std::int64_t index = 0;
  std::vector<std::vector<Edge>> rotation;
  int genus = 0;
  /// agrees[v]: beta_v == r_v.
  std::vector<bool> agrees;
  /// First vertex where the torsors differ, with its witness.
  std::optional<Vertex> distinguishing_vertex;
  std::optional<ActionWitness> witness;

  bool agree_everywhere() const;
};

struct SearchOptions {
  /// The forward table is valid because the suite establishes bijectivity.
  InverseMethod inverse = InverseMethod::kForwardTable;
};

struct SearchReport {
  std::vector<SystemVerdict> systems;
  /// Genus-0 systems where some vertex disagrees (contradicts the planar theorem).
  std::vector<std::int64_t> theorem_violations;
  /// Positive-genus systems where the torsors agree at every vertex.
  std::vector<std::int64_t> counterexamples;

  bool ok() const { return theorem_violations.empty(); }
};

/// Walks every rotation system of `base`. Throws NotSimple for multigraphs.
SearchReport search_conjecture(const RibbonGraph& base, const SearchOptions& options = {});

/// Line-oriented JSON: one record per system, then a summary line.
std::string search_report_json(const RibbonGraph& base, const SearchReport& report);

struct CheckRecord {
  std::string check;
  std::string graph;
  /// JSON object text.
  std::string params;
  bool pass = true;
  /// JSON object text; "null" when passing.
  std::string witness;
};

struct SuiteReport {
  std::vector<CheckRecord> records;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
  /// One JSON object per record, then a summary line.
  std::string to_json_lines() const;
};

struct SuiteOptions {
  DualConvention dual = DualConvention::standard();
  /// Worker threads over corpus graphs; results are merged in corpus order.
  int jobs = 1;
  std::uint64_t seed = 7;
  /// Restrict to these check names (all when empty).
  std::set<std::string> only;
};

/// Names of every check the suite can run.
const std::vector<std::string>& suite_checks();

SuiteReport run_theorem_suite(const std::vector<CorpusEntry>& corpus,
                              const SuiteOptions& options = {});

}  // namespace ribbon
