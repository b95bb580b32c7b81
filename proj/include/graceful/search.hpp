#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graceful/labelling.hpp"
#include "graceful/tree_model.hpp"

namespace graceful {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr double kDefaultTimeBudgetSecs = 60.0;

struct SearchConstraints {
  /// vertex -> required label
  std::vector<std::pair<Vertex, Label>> pins;
  /// (vertex, label) pairs that may not be used
  std::vector<std::pair<Vertex, Label>> forbid;
  std::optional<double> time_budget_secs;
  std::optional<std::uint64_t> node_budget;
};

enum class SearchStatus { kFound, kExhausted, kTimeout };

const char* to_string(SearchStatus status);

struct SearchOutcome {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<Labelling> witness;
  std::uint64_t nodes = 0;
  double elapsed_secs = 0.0;
};

/// Backtracking search assigning edge labels n-1, n-2, ... in turn. Returns a
/// witness satisfying every pin, kExhausted when none exists, kTimeout when a
/// budget ran out first. Throws std::invalid_argument for inconsistent pins.
SearchOutcome find_graceful(const GeneralTree& t, const SearchConstraints& c = {});

struct CountOptions {
  Vertex max_vertices = 10;
  bool force = false;
};

/// Number of graceful labellings of t. Throws std::invalid_argument when t is
/// larger than the bound and force is not set.
std::uint64_t count_graceful(const GeneralTree& t, const CountOptions& options = {});

enum class Verdict { kYes, kNo, kTimeout };

const char* to_string(Verdict verdict);

/// How an orbit's verdict was obtained.
enum class VerdictSource { kSearch, kComplement, kConstructive };

const char* to_string(VerdictSource source);

struct OrbitVerdict {
  Vertex representative = 0;
  std::vector<Vertex> members;
  Verdict verdict = Verdict::kTimeout;
  VerdictSource source = VerdictSource::kSearch;
  /// For kYes: graceful, representative labelled 0.
  std::optional<Labelling> witness;
  std::uint64_t nodes = 0;
  double elapsed_secs = 0.0;
  /// Construction method name when source is kConstructive.
  std::string method;
};

struct RotatabilityReport {
  std::string tree_id;
  Vertex n = 0;
  std::vector<OrbitVerdict> entries;

  bool all_yes() const;
  bool any_no() const;
  bool any_timeout() const;
};

struct RotatabilityOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  double time_budget_secs = kDefaultTimeBudgetSecs;
  /// Orbit searches run concurrently in batches of this size.
  int jobs = 1;
  /// Certify the orbit of the vertex labelled n-1 in each witness by complement.
  bool use_complement = true;
};

/// Decides, orbit by orbit, whether some graceful labelling puts 0 there.
RotatabilityReport is_zero_rotatable(const GeneralTree& t, const RotatabilityOptions& options = {},
                                     std::string tree_id = {});

/// Witness with 0 at `vertex` turned into one with 0 at `target`, for two
/// vertices in the same orbit.
Labelling move_zero(const GeneralTree& t, const Labelling& witness, Vertex vertex, Vertex target);

}  // namespace graceful
