#include "graceful/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace graceful {

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kExhausted: return "exhausted";
    case SearchStatus::kTimeout: return "timeout";
  }
  return "unknown";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kTimeout: return "timeout";
  }
  return "unknown";
}

const char* to_string(VerdictSource source) {
  switch (source) {
    case VerdictSource::kSearch: return "search";
    case VerdictSource::kComplement: return "complement";
    case VerdictSource::kConstructive: return "constructive";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

// Edge-label-descending backtracking. The largest edge label not yet realised
// must sit on some edge whose endpoint labels are (a, a+m); every such choice
// is tried, so each graceful labelling is reached along exactly one path.
class Backtracker {
 public:
  enum class Mode { kFind, kCount };

  Backtracker(const GeneralTree& t, Mode mode) : t_(t), n_(t.size()), mode_(mode) {
    label_of_.assign(n_, -1);
    vertex_of_.assign(n_, -1);
    edge_used_.assign(n_, 0);
  }

  void forbid(Vertex v, Label l) {
    if (forbidden_.empty()) forbidden_.assign(static_cast<std::size_t>(n_) * n_, 0);
    forbidden_[static_cast<std::size_t>(v) * n_ + l] = 1;
  }
  void break_complement_symmetry() { break_symmetry_ = true; }
  void set_budgets(std::optional<std::uint64_t> nodes, std::optional<double> secs) {
    if (nodes) node_budget_ = *nodes;
    if (secs) deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*secs));
  }

  // Places a pin before the search; false if it already clashes.
  bool pin(Vertex v, Label l) { return place(v, static_cast<int>(l)); }

  void run() { solve(n_ - 1); }

  bool timed_out() const { return timed_out_; }
  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t solutions() const { return solutions_; }
  const std::optional<Labelling>& witness() const { return witness_; }

 private:
  bool place(Vertex v, int l) {
    if (!forbidden_.empty() && forbidden_[static_cast<std::size_t>(v) * n_ + l]) return false;
    auto nb = t_.neighbours(v);
    std::size_t marked = 0;
    bool ok = true;
    for (; marked < nb.size(); ++marked) {
      const int other = label_of_[nb[marked]];
      if (other < 0) continue;
      const int d = std::abs(l - other);
      if (edge_used_[d]) {
        ok = false;
        break;
      }
      edge_used_[d] = 1;
    }
    if (ok) {
      label_of_[v] = l;
      vertex_of_[l] = v;
      if (break_symmetry_ && vertex_of_[0] >= 0 && vertex_of_[n_ - 1] >= 0 && vertex_of_[n_ - 1] < vertex_of_[0]) {
        label_of_[v] = -1;
        vertex_of_[l] = -1;
        ok = false;
      } else {
        return true;
      }
    }
    for (std::size_t i = 0; i < marked; ++i) {
      const int other = label_of_[nb[i]];
      if (other >= 0) edge_used_[std::abs(l - other)] = 0;
    }
    return false;
  }

  void unplace(Vertex v) {
    const int l = label_of_[v];
    for (Vertex w : t_.neighbours(v)) {
      if (label_of_[w] >= 0) edge_used_[std::abs(l - label_of_[w])] = 0;
    }
    label_of_[v] = -1;
    vertex_of_[l] = -1;
  }

  bool tick() {
    ++nodes_;
    if (nodes_ >= node_budget_) {
      timed_out_ = true;
    } else if (deadline_ && (nodes_ & 1023) == 0 && Clock::now() >= *deadline_) {
      timed_out_ = true;
    }
    return !timed_out_;
  }

  // True when the search should stop.
  bool try_place(Vertex v, int l, int m) {
    if (!tick()) return true;
    if (!place(v, l)) return false;
    const bool stop = solve(m - 1);
    unplace(v);
    return stop;
  }

  bool try_place_pair(Vertex x, int lx, Vertex y, int ly, int m) {
    if (!tick()) return true;
    if (!place(x, lx)) return false;
    bool stop = false;
    if (place(y, ly)) {
      stop = solve(m - 1);
      unplace(y);
    }
    unplace(x);
    return stop;
  }

  bool solve(int m) {
    while (m >= 1 && edge_used_[m]) --m;
    if (m == 0) {
      ++solutions_;
      if (mode_ == Mode::kFind) {
        std::vector<Label> labels(label_of_.begin(), label_of_.end());
        witness_ = Labelling(std::move(labels));
        return true;
      }
      return false;
    }
    for (int a = 0; a + m < n_; ++a) {
      const int b = a + m;
      const Vertex u = vertex_of_[a];
      const Vertex w = vertex_of_[b];
      if (u >= 0 && w >= 0) continue;
      if (u >= 0 || w >= 0) {
        const Vertex anchor = u >= 0 ? u : w;
        const int missing = u >= 0 ? b : a;
        for (Vertex x : t_.neighbours(anchor)) {
          if (label_of_[x] < 0 && try_place(x, missing, m)) return true;
        }
        continue;
      }
      for (const auto& [x, y] : t_.edges()) {
        if (label_of_[x] >= 0 || label_of_[y] >= 0) continue;
        const Vertex lo = std::min(x, y);
        const Vertex hi = std::max(x, y);
        if (try_place_pair(lo, a, hi, b, m)) return true;
        if (try_place_pair(lo, b, hi, a, m)) return true;
      }
    }
    return false;
  }

  const GeneralTree& t_;
  const Vertex n_;
  const Mode mode_;
  std::vector<int> label_of_;
  std::vector<Vertex> vertex_of_;
  std::vector<char> edge_used_;
  std::vector<char> forbidden_;
  bool break_symmetry_ = false;
  std::uint64_t node_budget_ = UINT64_MAX;
  std::optional<Clock::time_point> deadline_;
  bool timed_out_ = false;
  std::uint64_t nodes_ = 0;
  std::uint64_t solutions_ = 0;
  std::optional<Labelling> witness_;
};

void validate(const GeneralTree& t, const SearchConstraints& c) {
  const Label n = t.size();
  std::vector<char> vertex_pinned(n, 0);
  std::vector<char> label_pinned(n, 0);
  for (const auto& [v, l] : c.pins) {
    if (v < 0 || v >= n) throw std::invalid_argument("pinned vertex out of range");
    if (l < 0 || l >= n) throw std::invalid_argument("pinned label out of range");
    if (vertex_pinned[v]) throw std::invalid_argument("vertex pinned twice");
    if (label_pinned[l]) throw std::invalid_argument("two vertices pinned to the same label");
    vertex_pinned[v] = label_pinned[l] = 1;
  }
  for (const auto& [v, l] : c.forbid) {
    if (v < 0 || v >= n || l < 0 || l >= n) throw std::invalid_argument("forbidden pair out of range");
    for (const auto& pin : c.pins) {
      if (pin.first == v && pin.second == l) throw std::invalid_argument("pin contradicts a forbidden pair");
    }
  }
}

bool satisfies(const Labelling& f, const SearchConstraints& c) {
  for (const auto& [v, l] : c.pins) {
    if (f[v] != l) return false;
  }
  for (const auto& [v, l] : c.forbid) {
    if (f[v] == l) return false;
  }
  return true;
}

}  // namespace

SearchOutcome find_graceful(const GeneralTree& t, const SearchConstraints& c) {
  validate(t, c);
  const auto start = Clock::now();
  SearchOutcome out;

  if (t.size() == 1) {
    // No edges to branch on; validate() has already checked any pin.
    const bool banned = std::any_of(c.forbid.begin(), c.forbid.end(), [](const auto& p) { return p.second == 0; });
    if (!banned) {
      out.status = SearchStatus::kFound;
      out.witness = Labelling({0});
    }
    return out;
  }

  Backtracker search(t, Backtracker::Mode::kFind);
  for (const auto& [v, l] : c.forbid) search.forbid(v, l);
  if (c.pins.empty() && c.forbid.empty()) search.break_complement_symmetry();
  search.set_budgets(c.node_budget, c.time_budget_secs);

  bool feasible = true;
  for (const auto& [v, l] : c.pins) feasible = feasible && search.pin(v, l);
  if (feasible) search.run();

  out.nodes = search.nodes();
  out.elapsed_secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (search.witness()) {
    out.status = SearchStatus::kFound;
    out.witness = search.witness();
    if (!is_graceful(t, *out.witness) || !satisfies(*out.witness, c)) {
      throw std::logic_error("search returned a labelling that fails verification");
    }
  } else {
    out.status = search.timed_out() ? SearchStatus::kTimeout : SearchStatus::kExhausted;
  }
  return out;
}

std::uint64_t count_graceful(const GeneralTree& t, const CountOptions& options) {
  if (t.size() > options.max_vertices && !options.force) {
    throw std::invalid_argument("tree has " + std::to_string(t.size()) + " vertices, above the counting bound " +
                                std::to_string(options.max_vertices));
  }
  if (t.size() == 1) return 1;
  // Complement pairs each labelling with 0 before n-1 (by vertex index) with
  // one where n-1 comes first, so count one side and double it.
  Backtracker search(t, Backtracker::Mode::kCount);
  search.break_complement_symmetry();
  search.run();
  return 2 * search.solutions();
}

bool RotatabilityReport::all_yes() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.verdict == Verdict::kYes; });
}

bool RotatabilityReport::any_no() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.verdict == Verdict::kNo; });
}

bool RotatabilityReport::any_timeout() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.verdict == Verdict::kTimeout; });
}

Labelling move_zero(const GeneralTree& t, const Labelling& witness, Vertex vertex, Vertex target) {
  if (vertex == target) return witness;
  auto phi = automorphism_mapping(t, vertex, target);
  if (!phi) throw std::invalid_argument("vertices lie in different orbits");
  return transport(witness, *phi);
}

RotatabilityReport is_zero_rotatable(const GeneralTree& t, const RotatabilityOptions& options, std::string tree_id) {
  const OrbitPartition orbits = vertex_orbits(t);
  RotatabilityReport report;
  report.tree_id = std::move(tree_id);
  report.n = t.size();
  report.entries.resize(orbits.count());
  std::vector<char> decided(orbits.count(), 0);
  for (std::size_t o = 0; o < orbits.count(); ++o) {
    report.entries[o].representative = orbits.representative(o);
    report.entries[o].members = orbits.orbits[o];
  }

  const std::size_t jobs = static_cast<std::size_t>(std::max(1, options.jobs));
  std::size_t next = 0;
  while (true) {
    std::vector<std::size_t> batch;
    for (; next < orbits.count() && batch.size() < jobs; ++next) {
      if (!decided[next]) batch.push_back(next);
    }
    if (batch.empty()) break;

    std::vector<SearchOutcome> outcomes(batch.size());
    auto run_one = [&](std::size_t i) {
      SearchConstraints c;
      c.pins = {{orbits.representative(batch[i]), 0}};
      c.node_budget = options.node_budget;
      c.time_budget_secs = options.time_budget_secs;
      outcomes[i] = find_graceful(t, c);
    };
    if (batch.size() == 1) {
      run_one(0);
    } else {
      std::vector<std::thread> workers;
      for (std::size_t i = 0; i < batch.size(); ++i) workers.emplace_back(run_one, i);
      for (auto& w : workers) w.join();
    }

    // Results are consumed in orbit order, and an orbit settled meanwhile by an
    // earlier complement is dropped, so the report does not depend on jobs.
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (decided[batch[i]]) continue;
      auto& entry = report.entries[batch[i]];
      auto& outcome = outcomes[i];
      entry.nodes = outcome.nodes;
      entry.elapsed_secs = outcome.elapsed_secs;
      entry.source = VerdictSource::kSearch;
      entry.method = "search";
      decided[batch[i]] = 1;
      switch (outcome.status) {
        case SearchStatus::kFound: entry.verdict = Verdict::kYes; break;
        case SearchStatus::kExhausted: entry.verdict = Verdict::kNo; break;
        case SearchStatus::kTimeout: entry.verdict = Verdict::kTimeout; break;
      }
      if (outcome.status != SearchStatus::kFound) continue;
      entry.witness = std::move(outcome.witness);

      if (!options.use_complement || t.size() < 2) continue;
      const Vertex top_holder = entry.witness->inverse()[t.size() - 1];
      const std::size_t o = orbits.orbit_of[top_holder];
      if (decided[o]) continue;
      auto& other = report.entries[o];
      other.verdict = Verdict::kYes;
      other.source = VerdictSource::kComplement;
      other.method = "complement";
      other.witness = move_zero(t, complement(*entry.witness), top_holder, other.representative);
      decided[o] = 1;
    }
  }
  return report;
}

}  // namespace graceful
