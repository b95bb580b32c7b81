// graceful: build rooted symmetric trees, label them, verify labellings,
// decide 0-rotatability and sweep families for counterexamples.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "graceful/constructive.hpp"
#include "graceful/harness.hpp"
#include "graceful/io.hpp"
#include "graceful/search.hpp"

using namespace graceful;

namespace {

struct TreeArgs {
  std::string rst;
  int path = 0;
  std::string file;

  void add_to(CLI::App* cmd) {
    auto* a = cmd->add_option("--rst", rst, "daughter degree sequence, e.g. 2,3,4");
    auto* b = cmd->add_option("--path", path, "path on N vertices")->check(CLI::Range(2, 1 << 30));
    auto* c = cmd->add_option("--tree", file, "tree JSON file");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  io::TreeInput load() const {
    if (!rst.empty()) return io::from_rooted(RootedSymmetricTree(io::parse_degrees(rst)));
    if (path > 0) {
      return io::from_rooted(RootedSymmetricTree(DaughterDegreeSequence(std::vector<std::int64_t>(path - 1, 1))));
    }
    if (!file.empty()) return io::tree_from_json(io::read_json_file(file));
    throw io::SchemaError("one of --rst, --path or --tree is required");
  }
};

struct BudgetArgs {
  std::optional<std::uint64_t> nodes;
  std::optional<double> secs;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--budget-nodes", nodes, "search nodes per orbit (env GRACEFUL_BUDGET_NODES)");
    cmd->add_option("--budget-secs", secs, "seconds per orbit (env GRACEFUL_BUDGET_SECS)");
  }

  Budgets resolve() const {
    Budgets b = budgets_from_env();
    if (nodes) b.nodes = *nodes;
    if (secs) b.secs = *secs;
    return b;
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    io::write_text_file(out_path, text);
  }
}

const RootedSymmetricTree& require_rooted(const io::TreeInput& tree, const std::string& what) {
  if (!tree.rooted) throw io::SchemaError(what + " needs a rooted symmetric tree (--rst or --path)");
  return *tree.rooted;
}

int report_unsupported(const Unsupported& u) {
  std::cerr << "Unsupported(" << to_string(u.reason) << "): " << u.detail << "\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graceful labellings and 0-rotatability of rooted symmetric trees"};
  app.require_subcommand(1);

  // build
  TreeArgs build_tree;
  std::string build_format = "json";
  std::string build_out;
  auto* build = app.add_subcommand("build", "Emit a tree as JSON or DOT");
  build_tree.add_to(build);
  build->add_option("--format", build_format)->check(CLI::IsMember({"json", "dot"}));
  build->add_option("--out", build_out, "output file (default stdout)");

  // label
  TreeArgs label_tree;
  std::string method = "theorem1";
  std::optional<int> level;
  std::optional<Vertex> vertex;
  std::string desired = "0";
  bool explain = false;
  bool label_dot = false;
  std::string label_out;
  auto* label = app.add_subcommand("label", "Construct a graceful labelling");
  label_tree.add_to(label);
  label->add_option("--method", method)->check(CLI::IsMember({"theorem1", "lemma1", "theorem2", "zero_at"}));
  label->add_option("--level", level, "target level for theorem2 (q-1 or q; default q)");
  label->add_option("--vertex", vertex, "target vertex for theorem2 or zero_at");
  label->add_option("--desired", desired, "label for the target: 0 or max")->check(CLI::IsMember({"0", "max"}));
  label->add_flag("--explain", explain, "attach the construction trace");
  label->add_flag("--dot", label_dot, "emit DOT with vertex and edge labels instead of JSON");
  label->add_option("--out", label_out, "output file (default stdout)");

  // verify
  TreeArgs verify_tree;
  std::string labels_file;
  auto* verify = app.add_subcommand("verify", "Check a labelling for gracefulness");
  verify_tree.add_to(verify);
  verify->add_option("--labels", labels_file, "labelling JSON file")->required();

  // rotate0
  TreeArgs rotate_tree_args;
  BudgetArgs rotate_budgets;
  std::optional<Vertex> rotate_vertex_arg;
  bool rotate_all = false;
  bool search_only = false;
  bool differential = false;
  int rotate_jobs = 1;
  std::string rotate_format = "json";
  bool with_witnesses = false;
  std::string rotate_out;
  auto* rotate = app.add_subcommand("rotate0", "Decide whether 0 can be placed on a vertex or on every vertex");
  rotate_tree_args.add_to(rotate);
  rotate_budgets.add_to(rotate);
  auto* v_opt = rotate->add_option("--vertex", rotate_vertex_arg, "single vertex");
  auto* all_opt = rotate->add_flag("--all", rotate_all, "every automorphism orbit");
  v_opt->excludes(all_opt);
  rotate->add_flag("--search-only", search_only, "skip the constructions");
  rotate->add_flag("--differential", differential, "re-check constructive verdicts with the search");
  rotate->add_option("--jobs", rotate_jobs, "concurrent orbit searches")->check(CLI::PositiveNumber);
  rotate->add_option("--format", rotate_format)->check(CLI::IsMember({"json", "csv"}));
  rotate->add_flag("--witnesses", with_witnesses, "include witness labellings in JSON output");
  rotate->add_option("--out", rotate_out, "output file (default stdout)");

  // sweep
  std::string family_name;
  std::string levels_range, degrees_range, legs_range, branches_range;
  std::optional<std::int64_t> kmax;
  std::int64_t nmax = 64;
  BudgetArgs sweep_budgets;
  int sweep_jobs = 1;
  bool timing = false;
  bool sweep_search_only = false;
  std::string witness_dir;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Check 0-rotatability across a tree family, CSV report");
  sweep->add_option("--family", family_name)
      ->required()
      ->check(CLI::IsMember({"rst_all", "symmetric_spider", "symmetric_banana", "q3"}));
  sweep->add_option("--levels", levels_range, "level count q range, e.g. 2..5 (rst_all)");
  sweep->add_option("--degrees", degrees_range, "daughter degree range (rst_all, q3; k_3 for bananas)");
  sweep->add_option("--kmax", kmax, "shorthand for --degrees 1..K");
  sweep->add_option("--legs", legs_range, "leg length range (symmetric_spider)");
  sweep->add_option("--branches", branches_range, "branch count range (spider; k_1 for bananas)");
  sweep->add_option("--nmax", nmax, "largest vertex count");
  sweep_budgets.add_to(sweep);
  sweep->add_option("--jobs", sweep_jobs, "trees processed concurrently")->check(CLI::PositiveNumber);
  sweep->add_flag("--timing", timing, "fill the time_ms column");
  sweep->add_flag("--search-only", sweep_search_only, "skip the constructions");
  sweep->add_option("--witnesses", witness_dir, "directory for per-tree witness bundles");
  sweep->add_option("--out", sweep_out, "CSV file (default stdout)");

  // orbits / classify
  TreeArgs info_tree;
  auto* info = app.add_subcommand("info", "Structure flags and automorphism orbits");
  info_tree.add_to(info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) {
      auto tree = build_tree.load();
      if (build_format == "dot") {
        emit(io::to_dot(tree.general), build_out);
      } else {
        auto doc = tree.rooted ? io::tree_to_json(*tree.rooted) : io::tree_to_json(tree.general);
        emit(doc.dump() + "\n", build_out);
      }
      return kExitOk;
    }

    if (*label) {
      auto tree = label_tree.load();
      const auto& t = require_rooted(tree, "label");
      const Label wanted = desired == "0" ? 0 : t.size() - 1;
      Construction result;
      if (method == "theorem1") {
        result = algebraic_construction(t);
      } else if (method == "lemma1") {
        auto built = transposition_construction(t);
        if (auto* u = std::get_if<Unsupported>(&built)) return report_unsupported(*u);
        result = std::get<Construction>(built);
      } else if (method == "theorem2") {
        const int lvl = level.value_or(t.levels());
        if (lvl != t.levels() && lvl != t.levels() - 1) {
          throw io::SchemaError("--level must be q-1 or q for theorem2");
        }
        auto built = compose_broom_and_subtree(t, lvl, wanted, vertex);
        if (auto* u = std::get_if<Unsupported>(&built)) return report_unsupported(*u);
        result = std::get<Construction>(built);
      } else {
        if (!vertex) throw io::SchemaError("zero_at needs --vertex");
        auto built = zero_at(ZeroAtRequest{&t, *vertex, wanted});
        if (auto* u = std::get_if<Unsupported>(&built)) return report_unsupported(*u);
        result = std::get<Construction>(built);
      }
      const auto check = check_graceful(t.general(), result.labelling);
      if (!check.ok()) {
        std::cerr << "internal error: constructed labelling fails verification: " << check.message << "\n";
        return kExitVerifyFailed;
      }
      if (label_dot) {
        emit(io::to_dot(t.general(), io::annotate(t.general(), result.labelling)), label_out);
      } else {
        auto doc = io::labelling_to_json(result.labelling);
        if (explain) doc["trace"] = io::trace_to_json(result.trace);
        emit(doc.dump() + "\n", label_out);
      }
      return kExitOk;
    }

    if (*verify) {
      auto tree = verify_tree.load();
      auto f = io::labelling_from_json(io::read_json_file(labels_file));
      const auto check = check_graceful(tree.general, f);
      if (check.ok()) {
        std::cout << "ok\n";
        return kExitOk;
      }
      std::cout << "fail: " << to_string(check.violation) << ": " << check.message << "\n";
      return kExitVerifyFailed;
    }

    if (*rotate) {
      auto tree = rotate_tree_args.load();
      RotateOptions options;
      options.budgets = rotate_budgets.resolve();
      options.jobs = rotate_jobs;
      options.constructive = !search_only;
      options.differential = differential;

      RotatabilityReport report;
      std::vector<Vertex> disagreements;
      if (rotate_vertex_arg) {
        report.tree_id = tree.id;
        report.n = tree.general.size();
        report.entries.push_back(rotate_vertex(tree, *rotate_vertex_arg, options));
        report.entries.back().members = {*rotate_vertex_arg};
      } else {
        if (!rotate_all) throw io::SchemaError("rotate0 needs --vertex or --all");
        auto outcome = rotate_tree(tree, options);
        report = std::move(outcome.report);
        disagreements = std::move(outcome.disagreements);
      }
      for (const auto& e : report.entries) {
        if (e.witness && !is_graceful(tree.general, *e.witness)) {
          std::cerr << "internal error: witness for vertex " << e.representative << " fails verification\n";
          return kExitVerifyFailed;
        }
      }
      if (rotate_format == "csv") {
        emit(io::report_csv_header() + "\n" + io::report_to_csv(report), rotate_out);
      } else {
        auto doc = io::report_to_json(report, with_witnesses);
        if (differential) doc["disagreements"] = disagreements;
        emit(doc.dump(2) + "\n", rotate_out);
      }
      if (!disagreements.empty()) return kExitVerifyFailed;
      if (report.any_no()) return kExitCounterexample;
      if (report.any_timeout()) return kExitTimeout;
      return kExitOk;
    }

    if (*sweep) {
      SweepSpec spec;
      spec.family = parse_family(family_name);
      if (!levels_range.empty()) spec.levels = parse_range(levels_range);
      if (kmax) spec.degrees = {1, *kmax};
      if (!degrees_range.empty()) spec.degrees = parse_range(degrees_range);
      if (!legs_range.empty()) spec.legs = parse_range(legs_range);
      if (!branches_range.empty()) spec.branches = parse_range(branches_range);
      spec.n_max = nmax;
      spec.budgets = sweep_budgets.resolve();
      spec.jobs = sweep_jobs;
      spec.timing = timing;
      spec.constructive = !sweep_search_only;
      if (!witness_dir.empty()) spec.witness_dir = witness_dir;

      SweepSummary summary;
      if (sweep_out.empty()) {
        summary = run_sweep(spec, std::cout, std::cerr);
      } else {
        std::ofstream csv(sweep_out);
        if (!csv) throw std::runtime_error("cannot write " + sweep_out);
        summary = run_sweep(spec, csv, std::cerr);
      }
      std::cerr << summary.trees << " trees, " << summary.all_yes << " fully 0-rotatable, "
                << summary.counterexamples.size() << " counterexamples, " << summary.inconclusive.size()
                << " inconclusive\n";
      return summary.exit_code();
    }

    if (*info) {
      auto tree = info_tree.load();
      const auto flags = classify(tree.general);
      const auto orbits = vertex_orbits(tree.general);
      io::json doc{{"tree", tree.id},
                   {"n", tree.general.size()},
                   {"is_path", flags.is_path},
                   {"is_caterpillar", flags.is_caterpillar},
                   {"is_spider", flags.is_spider},
                   {"is_symmetric_spider", flags.is_symmetric_spider},
                   {"is_symmetric_banana", flags.is_symmetric_banana},
                   {"orbits", orbits.orbits}};
      if (tree.rooted) doc["level_numbers"] = tree.rooted->level_numbers();
      std::cout << doc.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const io::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
