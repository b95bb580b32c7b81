#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graceful/io.hpp"
#include "graceful/search.hpp"
#include "graceful/tree_model.hpp"

namespace graceful {

/// Process exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerifyFailed = 2,
  kExitCounterexample = 3,
  kExitTimeout = 4,
};

struct Budgets {
  std::uint64_t nodes = kDefaultNodeBudget;
  double secs = kDefaultTimeBudgetSecs;
};

/// Defaults overridden by GRACEFUL_BUDGET_NODES / GRACEFUL_BUDGET_SECS.
/// Throws std::invalid_argument on unparsable values.
Budgets budgets_from_env(Budgets defaults = {});

struct RotateOptions {
  Budgets budgets;
  int jobs = 1;
  /// Try the constructions before searching.
  bool constructive = true;
  /// Also search orbits settled constructively and compare.
  bool differential = false;
};

struct RotateOutcome {
  RotatabilityReport report;
  /// Orbits where construction and search disagreed (differential mode only).
  std::vector<Vertex> disagreements;
};

/// 0-rotatability of a tree: constructions first for rooted symmetric input,
/// then the search oracle for every orbit they leave open.
RotateOutcome rotate_tree(const io::TreeInput& tree, const RotateOptions& options = {});

/// Settles a single vertex (construction, else search with a pin).
OrbitVerdict rotate_vertex(const io::TreeInput& tree, Vertex v, const RotateOptions& options = {});

enum class Family { kRstAll, kSymmetricSpider, kSymmetricBanana, kQ3 };

const char* to_string(Family family);
/// rst_all | symmetric_spider | symmetric_banana | q3. Throws std::invalid_argument.
Family parse_family(const std::string& name);

struct IntRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
};

/// "3" or "2..4". Throws std::invalid_argument.
IntRange parse_range(const std::string& text);

struct SweepSpec {
  Family family = Family::kQ3;
  IntRange levels{2, 64};      // q, rst_all
  IntRange degrees{1, 64};     // every k_i for rst_all and q3; k_3 for bananas
  IntRange legs{1, 4};         // spiders
  IntRange branches{1, 6};     // spider branch count; k_1 for bananas
  std::int64_t n_max = 64;
  Budgets budgets;
  int jobs = 1;
  bool constructive = true;
  bool timing = false;
  /// Directory for per-tree witness bundles (report JSON with witnesses).
  std::optional<std::string> witness_dir;
};

/// Throws std::invalid_argument for empty ranges or n_max < 1.
void validate(const SweepSpec& spec);

/// Daughter sequences of the family inside the parameter box, each once,
/// ordered by level count and then lexicographically.
std::vector<DaughterDegreeSequence> enumerate_family(const SweepSpec& spec);

/// Number of sequences in the box, counted without materialising them.
std::uint64_t family_size(const SweepSpec& spec);

inline constexpr const char* kSweepSchema = "graceful-sweep/1";

struct ReportRow {
  std::string family;
  std::string tree;  // "2-1-1-1"
  Vertex n = 0;
  int q = 0;
  std::vector<Verdict> verdicts;
  std::vector<std::string> methods;
  std::uint64_t nodes = 0;
  double elapsed_secs = 0.0;
  /// Index of the first earlier row with an isomorphic tree, -1 if none.
  std::int64_t iso_of = -1;
};

std::string sweep_csv_header();
std::string to_csv(const ReportRow& row, bool timing);

struct SweepSummary {
  std::size_t trees = 0;
  std::size_t all_yes = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> inconclusive;

  int exit_code() const;
};

/// Runs the sweep, writing the CSV header and one flushed row per tree to csv;
/// counterexamples are announced on log.
SweepSummary run_sweep(const SweepSpec& spec, std::ostream& csv, std::ostream& log);

}  // namespace graceful
