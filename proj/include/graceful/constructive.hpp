#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graceful/labelling.hpp"
#include "graceful/tree_model.hpp"

namespace graceful {

/// Serialised names: theorem1, theorem2_odd, theorem2_even, lemma1,
/// complement_of, star_direct, search_fallback.
enum class ConstructionMethod {
  kTheorem1,
  kTheorem2Odd,
  kTheorem2Even,
  kLemma1,
  kComplementOf,
  kStarDirect,
  kSearchFallback,
};

const char* to_string(ConstructionMethod method);

enum class StepKind {
  kClosedForm,         // label T by the level-number formula
  kTranspositions,     // permute labels of T by `swaps`
  kBroom,              // label the broom branch P; value = level count q
  kSubtreeClosedForm,  // label H by the level-number formula
  kShift,              // H labels += value
  kReflect,            // H labels -> value - b
  kMerge,              // glue P and H at the root
  kComplement,         // b -> n-1-b on T
  kRemap,              // move labels along the branch automorphism from -> to
  kStar,               // star with centre label `value`; leaf `to` gets 0 if centre is n-1
};

const char* to_string(StepKind kind);

struct TraceStep {
  StepKind kind;
  Label value = 0;
  Vertex from = -1;
  Vertex to = -1;
  std::vector<std::pair<Label, Label>> swaps{};
  std::string note{};
};

/// Replaying `steps` with replay() reproduces the labelling exactly.
struct ConstructionTrace {
  ConstructionMethod method = ConstructionMethod::kTheorem1;
  std::vector<TraceStep> steps;
};

struct Construction {
  Labelling labelling;
  ConstructionTrace trace;
};

enum class Parity { kOdd, kEven };

/// Closed-form graceful labelling from the level numbers; the root gets 0 and
/// the first level-2 vertex gets n-1.
Labelling algebraic_label(const RootedSymmetricTree& t);

/// Labels the broom branch P of a decomposition (root, a spine of q-2 vertices,
/// k_{q-1} leaves). Its edge labels are the top run {n-p+1, ..., n-1}, p = |P|.
/// Throws std::invalid_argument if parity disagrees with q.
Constructed<Labelling> label_broom(const BroomDecomposition& d, Parity parity, Vertex n);

/// Root-preserving automorphism of t that sends `from` to `to` (same level),
/// built by swapping child indices along the two address paths.
std::vector<Vertex> branch_automorphism(const RootedSymmetricTree& t, Vertex from, Vertex to);

/// Broom-plus-subtree composition. Puts `desired` (0 or n-1) on a vertex of
/// `level` (q-1 or q): on `target` when given, otherwise on the vertex of the
/// last root branch with all-zero address below it.
Constructed<Construction> compose_broom_and_subtree(const RootedSymmetricTree& t, int level, Label desired,
                                                   std::optional<Vertex> target = std::nullopt);

/// (0 k_2)(h_2 h_2+k_2)...((k_1-1)h_2 (k_1-1)h_2+k_2) for a three-level tree.
Constructed<TranspositionProduct> leaf_transpositions(const RootedSymmetricTree& t);

/// Closed-form labelling rewritten by leaf_transpositions(): 0 lands on a leaf.
Constructed<Labelling> transposition_label(const RootedSymmetricTree& t);

/// transposition_label() with its trace.
Constructed<Construction> transposition_construction(const RootedSymmetricTree& t);

/// algebraic_label() with its trace.
Construction algebraic_construction(const RootedSymmetricTree& t);

struct ZeroAtRequest {
  const RootedSymmetricTree* tree = nullptr;
  Vertex target = 0;
  /// 0 or n-1.
  Label desired_label = 0;
};

/// Graceful labelling giving `desired_label` to the target vertex, using the
/// constructions that apply at its level. NoConstruction for middle levels of
/// deep trees.
Constructed<Construction> zero_at(const ZeroAtRequest& request);

/// Re-executes a construction trace.
Labelling replay(const RootedSymmetricTree& t, const ConstructionTrace& trace);

}  // namespace graceful
