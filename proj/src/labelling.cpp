#include "graceful/labelling.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace graceful {

bool Labelling::is_bijective() const {
  const Label n = size();
  std::vector<char> seen(n, 0);
  for (Label b : labels_) {
    if (b < 0 || b >= n || seen[b]) return false;
    seen[b] = 1;
  }
  return true;
}

std::vector<Vertex> Labelling::inverse() const {
  if (!is_bijective()) throw std::invalid_argument("labelling is not a bijection onto 0..n-1");
  std::vector<Vertex> inv(labels_.size());
  for (Vertex v = 0; v < size(); ++v) inv[labels_[v]] = v;
  return inv;
}

Label Labelling::max_label() const {
  return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
}

TranspositionProduct::TranspositionProduct(std::vector<std::pair<Label, Label>> swaps)
    : swaps_(std::move(swaps)) {
  std::vector<Label> seen;
  for (const auto& [a, b] : swaps_) {
    if (a == b) throw std::invalid_argument("transposition of a label with itself");
    seen.push_back(a);
    seen.push_back(b);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("transpositions in a product must be disjoint");
  }
}

std::string TranspositionProduct::to_string() const {
  std::string out;
  for (const auto& [a, b] : swaps_) {
    out += '(' + std::to_string(a) + ' ' + std::to_string(b) + ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Label> edge_labels(const GeneralTree& t, const Labelling& f) {
  if (f.size() != t.size()) throw std::invalid_argument("labelling size does not match tree");
  std::vector<Label> out;
  out.reserve(t.edges().size());
  for (const auto& [u, v] : t.edges()) out.push_back(std::abs(f[u] - f[v]));
  return out;
}

bool is_graceful(const GeneralTree& t, const Labelling& f) { return check_graceful(t, f).ok(); }

const char* to_string(Violation v) {
  switch (v) {
    case Violation::kNone: return "ok";
    case Violation::kSizeMismatch: return "size mismatch";
    case Violation::kLabelOutOfRange: return "label out of range";
    case Violation::kDuplicateVertexLabel: return "duplicate vertex label";
    case Violation::kDuplicateEdgeLabel: return "duplicate edge label";
  }
  return "unknown";
}

GracefulCheck check_graceful(const GeneralTree& t, const Labelling& f) {
  GracefulCheck check;
  const Label n = t.size();
  if (f.size() != t.size()) {
    check.violation = Violation::kSizeMismatch;
    check.message = "tree has " + std::to_string(n) + " vertices but labelling has " +
                    std::to_string(f.size()) + " labels";
    return check;
  }
  std::vector<Vertex> holder(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    const Label b = f[v];
    if (b < 0 || b >= n) {
      check.violation = Violation::kLabelOutOfRange;
      check.vertices = {v};
      check.value = b;
      check.message = "vertex " + std::to_string(v) + " has label " + std::to_string(b) +
                      " outside 0.." + std::to_string(n - 1);
      return check;
    }
    if (holder[b] != -1) {
      check.violation = Violation::kDuplicateVertexLabel;
      check.vertices = {holder[b], v};
      check.value = b;
      check.message = "vertices " + std::to_string(holder[b]) + " and " + std::to_string(v) +
                      " both have label " + std::to_string(b);
      return check;
    }
    holder[b] = v;
  }
  // n distinct labels in 0..n-1 give edge labels in 1..n-1; n-1 distinct ones cover it.
  std::vector<std::size_t> edge_with(n, t.edges().size());
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    const auto& [u, v] = t.edges()[i];
    const Label d = std::abs(f[u] - f[v]);
    if (edge_with[d] != t.edges().size()) {
      check.violation = Violation::kDuplicateEdgeLabel;
      check.edges = {t.edges()[edge_with[d]], t.edges()[i]};
      check.value = d;
      check.message = "edges " + std::to_string(check.edges[0].first) + "-" +
                      std::to_string(check.edges[0].second) + " and " + std::to_string(u) + "-" +
                      std::to_string(v) + " both have edge label " + std::to_string(d);
      return check;
    }
    edge_with[d] = i;
  }
  return check;
}

Labelling complement(const Labelling& f) {
  const Label top = f.size() - 1;
  std::vector<Label> out(f.labels());
  for (Label& b : out) b = top - b;
  return Labelling(std::move(out));
}

Labelling shift(const Labelling& f, Label offset) {
  std::vector<Label> out(f.labels());
  for (Label& b : out) b += offset;
  return Labelling(std::move(out));
}

Labelling reflect(const Labelling& f, Label pivot) {
  if (f.size() > 0 && pivot < f.max_label()) {
    throw std::invalid_argument("reflection pivot below the largest label would produce negative labels");
  }
  std::vector<Label> out(f.labels());
  for (Label& b : out) b = pivot - b;
  return Labelling(std::move(out));
}

Labelling apply_permutation(const Labelling& f, const TranspositionProduct& p) {
  const Label n = f.size();
  std::unordered_map<Label, Label> image;
  for (const auto& [a, b] : p.swaps()) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw std::out_of_range("transposition member outside 0..n-1");
    }
    image[a] = b;
    image[b] = a;
  }
  std::vector<Label> out(f.labels());
  for (Label& b : out) {
    if (auto it = image.find(b); it != image.end()) b = it->second;
  }
  return Labelling(std::move(out));
}

Labelling transport(const Labelling& f, const std::vector<Vertex>& phi) {
  if (phi.size() != static_cast<std::size_t>(f.size())) {
    throw std::invalid_argument("vertex map size does not match labelling");
  }
  std::vector<Label> out(f.size());
  for (Vertex v = 0; v < f.size(); ++v) out[phi[v]] = f[v];
  return Labelling(std::move(out));
}

void embed(const Labelling& part, const std::vector<Vertex>& to_parent, Labelling& whole) {
  if (to_parent.size() != static_cast<std::size_t>(part.size())) {
    throw std::invalid_argument("embedding size does not match sub-labelling");
  }
  for (Vertex v = 0; v < part.size(); ++v) whole[to_parent[v]] = part[v];
}

}  // namespace graceful
