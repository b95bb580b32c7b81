#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graceful/tree_model.hpp"

namespace graceful {

/// Vertex-indexed labels. A graceful labelling is a bijection onto {0, ..., n-1};
/// the type itself accepts any values so that the verifier can report what is
/// wrong with a bad one.
class Labelling {
 public:
  Labelling() = default;
  explicit Labelling(std::vector<Label> labels) : labels_(std::move(labels)) {}

  Vertex size() const { return static_cast<Vertex>(labels_.size()); }
  Label operator[](Vertex v) const { return labels_[v]; }
  Label& operator[](Vertex v) { return labels_[v]; }
  const std::vector<Label>& labels() const { return labels_; }

  bool is_bijective() const;
  /// Vertex holding each label. Throws std::invalid_argument if not a bijection.
  std::vector<Vertex> inverse() const;
  Label max_label() const;

  friend bool operator==(const Labelling&, const Labelling&) = default;

 private:
  std::vector<Label> labels_;
};

/// Disjoint transpositions of labels, applied simultaneously.
class TranspositionProduct {
 public:
  TranspositionProduct() = default;
  /// Throws std::invalid_argument if a label occurs twice or a pair is (a a).
  explicit TranspositionProduct(std::vector<std::pair<Label, Label>> swaps);

  const std::vector<std::pair<Label, Label>>& swaps() const { return swaps_; }
  std::string to_string() const;

 private:
  std::vector<std::pair<Label, Label>> swaps_;
};

/// |f(u) - f(v)| for each edge, in edge order.
/// Throws std::invalid_argument when sizes differ.
std::vector<Label> edge_labels(const GeneralTree& t, const Labelling& f);

bool is_graceful(const GeneralTree& t, const Labelling& f);

enum class Violation {
  kNone,
  kSizeMismatch,
  kLabelOutOfRange,
  kDuplicateVertexLabel,
  kDuplicateEdgeLabel,
};

const char* to_string(Violation v);

/// First thing wrong with f as a graceful labelling of t.
struct GracefulCheck {
  Violation violation = Violation::kNone;
  /// Offending vertices (for vertex problems) or the two edges sharing a label.
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  Label value = 0;
  std::string message;

  bool ok() const { return violation == Violation::kNone; }
};

GracefulCheck check_graceful(const GeneralTree& t, const Labelling& f);

/// b -> n-1-b.
Labelling complement(const Labelling& f);

/// b -> b + offset.
Labelling shift(const Labelling& f, Label offset);

/// b -> pivot - b. Throws std::invalid_argument if pivot < max label.
Labelling reflect(const Labelling& f, Label pivot);

/// Throws std::out_of_range if a swapped label lies outside {0, ..., n-1}.
Labelling apply_permutation(const Labelling& f, const TranspositionProduct& p);

/// Moves labels along a vertex map: result[phi[v]] = f[v].
Labelling transport(const Labelling& f, const std::vector<Vertex>& phi);

/// Writes a labelling of a subtree into the slots of its parent tree.
void embed(const Labelling& part, const std::vector<Vertex>& to_parent, Labelling& whole);

}  // namespace graceful
