#include "graceful/harness.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "graceful/constructive.hpp"

namespace graceful {

Budgets budgets_from_env(Budgets defaults) {
  if (const char* nodes = std::getenv("GRACEFUL_BUDGET_NODES"); nodes != nullptr && *nodes != '\0') {
    try {
      defaults.nodes = std::stoull(nodes);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("GRACEFUL_BUDGET_NODES is not a count: ") + nodes);
    }
  }
  if (const char* secs = std::getenv("GRACEFUL_BUDGET_SECS"); secs != nullptr && *secs != '\0') {
    try {
      defaults.secs = std::stod(secs);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("GRACEFUL_BUDGET_SECS is not a number: ") + secs);
    }
  }
  return defaults;
}

namespace {

OrbitVerdict search_vertex(const GeneralTree& t, Vertex v, const Budgets& budgets, bool after_construction) {
  SearchConstraints c;
  c.pins = {{v, 0}};
  c.node_budget = budgets.nodes;
  c.time_budget_secs = budgets.secs;
  auto outcome = find_graceful(t, c);

  OrbitVerdict verdict;
  verdict.representative = v;
  verdict.source = VerdictSource::kSearch;
  verdict.method = after_construction ? to_string(ConstructionMethod::kSearchFallback) : "search";
  verdict.nodes = outcome.nodes;
  verdict.elapsed_secs = outcome.elapsed_secs;
  switch (outcome.status) {
    case SearchStatus::kFound: verdict.verdict = Verdict::kYes; break;
    case SearchStatus::kExhausted: verdict.verdict = Verdict::kNo; break;
    case SearchStatus::kTimeout: verdict.verdict = Verdict::kTimeout; break;
  }
  verdict.witness = std::move(outcome.witness);
  return verdict;
}

std::optional<OrbitVerdict> construct_vertex(const RootedSymmetricTree& t, Vertex v) {
  auto built = zero_at(ZeroAtRequest{&t, v, 0});
  if (std::holds_alternative<Unsupported>(built)) return std::nullopt;
  auto& c = std::get<Construction>(built);
  OrbitVerdict verdict;
  verdict.representative = v;
  verdict.verdict = Verdict::kYes;
  verdict.source = VerdictSource::kConstructive;
  verdict.method = to_string(c.trace.method);
  verdict.witness = std::move(c.labelling);
  return verdict;
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads at a time.
template <class Fn>
void run_batched(std::size_t count, int jobs, Fn fn) {
  const std::size_t width = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t start = 0; start < count; start += width) {
    const std::size_t stop = std::min(count, start + width);
    if (stop - start == 1) {
      fn(start);
      continue;
    }
    std::vector<std::thread> workers;
    for (std::size_t i = start; i < stop; ++i) workers.emplace_back(fn, i);
    for (auto& w : workers) w.join();
  }
}

}  // namespace

OrbitVerdict rotate_vertex(const io::TreeInput& tree, Vertex v, const RotateOptions& options) {
  if (v < 0 || v >= tree.general.size()) throw std::out_of_range("vertex out of range");
  if (options.constructive && tree.rooted) {
    if (auto built = construct_vertex(*tree.rooted, v)) return *built;
  }
  return search_vertex(tree.general, v, options.budgets, options.constructive && tree.rooted.has_value());
}

RotateOutcome rotate_tree(const io::TreeInput& tree, const RotateOptions& options) {
  RotateOutcome out;
  if (!options.constructive || !tree.rooted) {
    RotatabilityOptions search_options;
    search_options.node_budget = options.budgets.nodes;
    search_options.time_budget_secs = options.budgets.secs;
    search_options.jobs = options.jobs;
    out.report = is_zero_rotatable(tree.general, search_options, tree.id);
    return out;
  }

  const GeneralTree& t = tree.general;
  const OrbitPartition orbits = vertex_orbits(t);
  out.report.tree_id = tree.id;
  out.report.n = t.size();
  out.report.entries.resize(orbits.count());

  std::vector<std::size_t> open;
  for (std::size_t o = 0; o < orbits.count(); ++o) {
    if (auto built = construct_vertex(*tree.rooted, orbits.representative(o))) {
      out.report.entries[o] = std::move(*built);
    } else {
      open.push_back(o);
    }
  }
  run_batched(open.size(), options.jobs, [&](std::size_t i) {
    out.report.entries[open[i]] = search_vertex(t, orbits.representative(open[i]), options.budgets, true);
  });
  for (std::size_t o = 0; o < orbits.count(); ++o) out.report.entries[o].members = orbits.orbits[o];

  if (options.differential) {
    std::vector<std::size_t> constructed;
    for (std::size_t o = 0; o < orbits.count(); ++o) {
      if (out.report.entries[o].source == VerdictSource::kConstructive) constructed.push_back(o);
    }
    std::vector<char> disagree(constructed.size(), 0);
    run_batched(constructed.size(), options.jobs, [&](std::size_t i) {
      auto check = search_vertex(t, orbits.representative(constructed[i]), options.budgets, false);
      disagree[i] = check.verdict == Verdict::kNo;
    });
    for (std::size_t i = 0; i < constructed.size(); ++i) {
      if (disagree[i]) out.disagreements.push_back(orbits.representative(constructed[i]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Families

const char* to_string(Family family) {
  switch (family) {
    case Family::kRstAll: return "rst_all";
    case Family::kSymmetricSpider: return "symmetric_spider";
    case Family::kSymmetricBanana: return "symmetric_banana";
    case Family::kQ3: return "q3";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::kRstAll, Family::kSymmetricSpider, Family::kSymmetricBanana, Family::kQ3}) {
    if (name == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown family \"" + name + "\"");
}

IntRange parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("bad range \"" + text + "\"");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

void validate(const SweepSpec& spec) {
  auto check = [](const IntRange& r, std::int64_t floor, const char* what) {
    if (r.lo < floor || r.hi < r.lo) {
      throw std::invalid_argument(std::string("empty or invalid range for ") + what);
    }
  };
  check(spec.levels, 2, "levels");
  check(spec.degrees, 1, "degrees");
  check(spec.legs, 1, "legs");
  check(spec.branches, 1, "branches");
  if (spec.n_max < 1) throw std::invalid_argument("n_max must be positive");
}

namespace {

void enumerate_rst(const SweepSpec& spec, int remaining, std::int64_t width, std::int64_t total,
                   std::vector<std::int64_t>& prefix, std::vector<DaughterDegreeSequence>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::int64_t k = spec.degrees.lo; k <= spec.degrees.hi; ++k) {
    const std::int64_t next_width = width * k;
    // Every later level is at least as wide as this one.
    if (total + remaining * next_width > spec.n_max) break;
    prefix.push_back(k);
    enumerate_rst(spec, remaining - 1, next_width, total + next_width, prefix, out);
    prefix.pop_back();
  }
}

std::uint64_t count_rst(const SweepSpec& spec, int remaining, std::int64_t width, std::int64_t slack,
                        std::map<std::tuple<int, std::int64_t, std::int64_t>, std::uint64_t>& memo) {
  if (remaining == 0) return 1;
  const auto key = std::make_tuple(remaining, width, slack);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::int64_t k = spec.degrees.lo; k <= spec.degrees.hi && width * k <= slack; ++k) {
    total += count_rst(spec, remaining - 1, width * k, slack - width * k, memo);
  }
  memo[key] = total;
  return total;
}

// Number of integers x in [lo, hi] with x <= cap.
std::uint64_t clipped(const IntRange& r, std::int64_t cap) {
  const std::int64_t top = std::min(r.hi, cap);
  return top < r.lo ? 0 : static_cast<std::uint64_t>(top - r.lo + 1);
}

}  // namespace

std::vector<DaughterDegreeSequence> enumerate_family(const SweepSpec& spec) {
  validate(spec);
  std::vector<DaughterDegreeSequence> out;
  switch (spec.family) {
    case Family::kQ3:
      for (std::int64_t k1 = spec.degrees.lo; k1 <= spec.degrees.hi; ++k1) {
        for (std::int64_t k2 = spec.degrees.lo; k2 <= spec.degrees.hi; ++k2) {
          if (1 + k1 + k1 * k2 <= spec.n_max) out.emplace_back(std::vector<std::int64_t>{k1, k2});
        }
      }
      break;
    case Family::kSymmetricSpider:
      for (std::int64_t legs = spec.legs.lo; legs <= spec.legs.hi; ++legs) {
        for (std::int64_t b = spec.branches.lo; b <= spec.branches.hi; ++b) {
          if (1 + b * legs > spec.n_max) continue;
          std::vector<std::int64_t> seq(legs, 1);
          seq[0] = b;
          out.emplace_back(std::move(seq));
        }
      }
      break;
    case Family::kSymmetricBanana:
      for (std::int64_t k1 = spec.branches.lo; k1 <= spec.branches.hi; ++k1) {
        for (std::int64_t k3 = spec.degrees.lo; k3 <= spec.degrees.hi; ++k3) {
          if (1 + k1 * (2 + k3) <= spec.n_max) out.emplace_back(std::vector<std::int64_t>{k1, 1, k3});
        }
      }
      break;
    case Family::kRstAll:
      for (std::int64_t q = spec.levels.lo; q <= spec.levels.hi && q <= spec.n_max; ++q) {
        std::vector<std::int64_t> prefix;
        enumerate_rst(spec, static_cast<int>(q - 1), 1, 1, prefix, out);
      }
      break;
  }
  return out;
}

std::uint64_t family_size(const SweepSpec& spec) {
  validate(spec);
  std::uint64_t total = 0;
  switch (spec.family) {
    case Family::kQ3:
      for (std::int64_t k1 = spec.degrees.lo; k1 <= spec.degrees.hi; ++k1) {
        total += clipped(spec.degrees, (spec.n_max - 1) / k1 - 1);
      }
      break;
    case Family::kSymmetricSpider:
      for (std::int64_t legs = spec.legs.lo; legs <= spec.legs.hi; ++legs) {
        total += clipped(spec.branches, (spec.n_max - 1) / legs);
      }
      break;
    case Family::kSymmetricBanana:
      for (std::int64_t k1 = spec.branches.lo; k1 <= spec.branches.hi; ++k1) {
        total += clipped(spec.degrees, (spec.n_max - 1) / k1 - 2);
      }
      break;
    case Family::kRstAll: {
      std::map<std::tuple<int, std::int64_t, std::int64_t>, std::uint64_t> memo;
      for (std::int64_t q = spec.levels.lo; q <= spec.levels.hi && q <= spec.n_max; ++q) {
        total += count_rst(spec, static_cast<int>(q - 1), 1, spec.n_max - 1, memo);
      }
      break;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Reports

std::string sweep_csv_header() { return "schema,family,tree,n,q,orbits,verdicts,methods,nodes,time_ms,iso_of"; }

std::string to_csv(const ReportRow& row, bool timing) {
  std::ostringstream out;
  out << kSweepSchema << ',' << row.family << ',' << row.tree << ',' << row.n << ',' << row.q << ','
      << row.verdicts.size() << ',';
  for (std::size_t i = 0; i < row.verdicts.size(); ++i) out << (i ? "|" : "") << to_string(row.verdicts[i]);
  out << ',';
  for (std::size_t i = 0; i < row.methods.size(); ++i) out << (i ? "|" : "") << row.methods[i];
  out << ',' << row.nodes << ',';
  if (timing) out << static_cast<std::int64_t>(row.elapsed_secs * 1000.0 + 0.5);
  out << ',';
  if (row.iso_of >= 0) out << row.iso_of;
  return out.str();
}

int SweepSummary::exit_code() const {
  if (!counterexamples.empty()) return kExitCounterexample;
  if (!inconclusive.empty()) return kExitTimeout;
  return kExitOk;
}

SweepSummary run_sweep(const SweepSpec& spec, std::ostream& csv, std::ostream& log) {
  const auto sequences = enumerate_family(spec);
  if (spec.witness_dir) std::filesystem::create_directories(*spec.witness_dir);

  RotateOptions options;
  options.budgets = spec.budgets;
  options.constructive = spec.constructive;
  // Parallelism goes across trees; each tree's orbits run serially.
  options.jobs = 1;

  csv << sweep_csv_header() << '\n' << std::flush;
  SweepSummary summary;
  std::map<std::string, std::int64_t> first_seen;
  const std::size_t width = static_cast<std::size_t>(std::max(1, spec.jobs));

  for (std::size_t start = 0; start < sequences.size(); start += width) {
    const std::size_t stop = std::min(sequences.size(), start + width);
    std::vector<std::optional<io::TreeInput>> trees(stop - start);
    std::vector<RotateOutcome> outcomes(stop - start);
    std::vector<double> elapsed(stop - start);
    run_batched(stop - start, spec.jobs, [&](std::size_t i) {
      const auto begin = std::chrono::steady_clock::now();
      trees[i] = io::from_rooted(RootedSymmetricTree(sequences[start + i]));
      outcomes[i] = rotate_tree(*trees[i], options);
      elapsed[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    });

    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto& seq = sequences[start + i];
      const auto& report = outcomes[i].report;
      ReportRow row;
      row.family = to_string(spec.family);
      row.tree = seq.to_string();
      for (char& ch : row.tree) {
        if (ch == ',') ch = '-';
      }
      row.n = report.n;
      row.q = seq.levels();
      row.elapsed_secs = elapsed[i];
      for (const auto& e : report.entries) {
        row.verdicts.push_back(e.verdict);
        row.methods.push_back(e.method);
        row.nodes += e.nodes;
      }
      const auto [it, fresh] =
          first_seen.try_emplace(canonical_code(trees[i]->general), static_cast<std::int64_t>(summary.trees));
      if (!fresh) row.iso_of = it->second;
      csv << to_csv(row, spec.timing) << '\n' << std::flush;

      ++summary.trees;
      if (report.all_yes()) ++summary.all_yes;
      if (report.any_no()) {
        summary.counterexamples.push_back(report.tree_id);
        for (const auto& e : report.entries) {
          if (e.verdict != Verdict::kNo) continue;
          log << "COUNTEREXAMPLE: " << report.tree_id << " (n=" << report.n << ") has no graceful labelling with 0 on "
              << "vertex " << e.representative << "; search exhausted after " << e.nodes
              << " nodes (node budget " << spec.budgets.nodes << ", time budget " << spec.budgets.secs << " s)\n";
        }
      } else if (report.any_timeout()) {
        summary.inconclusive.push_back(report.tree_id);
      }
      if (spec.witness_dir) {
        const std::string file = *spec.witness_dir + "/" + row.tree + ".json";
        io::write_text_file(file, io::report_to_json(report, true).dump(2) + "\n");
      }
    }
  }
  return summary;
}

}  // namespace graceful
