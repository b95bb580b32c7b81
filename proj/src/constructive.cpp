#include "graceful/constructive.hpp"

#include <algorithm>
#include <stdexcept>

namespace graceful {

const char* to_string(ConstructionMethod method) {
  switch (method) {
    case ConstructionMethod::kTheorem1: return "theorem1";
    case ConstructionMethod::kTheorem2Odd: return "theorem2_odd";
    case ConstructionMethod::kTheorem2Even: return "theorem2_even";
    case ConstructionMethod::kLemma1: return "lemma1";
    case ConstructionMethod::kComplementOf: return "complement_of";
    case ConstructionMethod::kStarDirect: return "star_direct";
    case ConstructionMethod::kSearchFallback: return "search_fallback";
  }
  return "unknown";
}

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::kClosedForm: return "closed_form";
    case StepKind::kTranspositions: return "transpositions";
    case StepKind::kBroom: return "broom";
    case StepKind::kSubtreeClosedForm: return "subtree_closed_form";
    case StepKind::kShift: return "shift";
    case StepKind::kReflect: return "reflect";
    case StepKind::kMerge: return "merge";
    case StepKind::kComplement: return "complement";
    case StepKind::kRemap: return "remap";
    case StepKind::kStar: return "star";
  }
  return "unknown";
}

Labelling algebraic_label(const RootedSymmetricTree& t) {
  const Vertex n = t.size();
  const int q = t.levels();
  const std::int64_t top = t.sequence().degrees()[0] * t.level_number(2);
  // weighted[v] = x_1 h_2 + x_2 h_3 + ... + x_{r-1} h_r
  std::vector<Label> weighted(n, 0);
  std::vector<Label> labels(n, 0);
  for (int r = 2; r <= q; ++r) {
    const std::int64_t k = t.sequence().degrees()[r - 2];
    const std::int64_t h = t.level_number(r);
    for (Vertex v = t.level_offset(r); v < t.level_offset(r) + t.level_width(r); ++v) {
      const std::int64_t x = (v - t.level_offset(r)) % k;
      weighted[v] = weighted[t.parent(v)] + x * h;
      labels[v] = r % 2 == 1 ? weighted[v] + (r - 1) / 2 : top - weighted[v] - (r - 2) / 2;
    }
  }
  return Labelling(std::move(labels));
}

namespace {

std::vector<int> depths(const GeneralTree& p) {
  std::vector<int> depth(p.size(), -1);
  std::vector<Vertex> order{0};
  depth[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : p.neighbours(order[i])) {
      if (depth[w] == -1) {
        depth[w] = depth[order[i]] + 1;
        order.push_back(w);
      }
    }
  }
  return depth;
}

}  // namespace

Constructed<Labelling> label_broom(const BroomDecomposition& d, Parity parity, Vertex n) {
  const GeneralTree& p = d.caterpillar;
  const auto depth = depths(p);
  const int deepest = *std::max_element(depth.begin(), depth.end());
  std::vector<Vertex> per_depth(deepest + 1, 0);
  for (int dp : depth) ++per_depth[dp];

  if (deepest < 2) {
    return Unsupported{UnsupportedReason::kNotBroom, "branch has no spine (fewer than three levels)"};
  }
  for (int j = 0; j < deepest; ++j) {
    if (per_depth[j] != 1) {
      return Unsupported{UnsupportedReason::kNotBroom,
                         "branch caterpillar is not a broom: " + std::to_string(per_depth[j]) +
                             " vertices at depth " + std::to_string(j)};
    }
  }
  const int q = deepest + 1;
  if ((q % 2 == 1) != (parity == Parity::kOdd)) {
    throw std::invalid_argument("parity does not match the level count of the tree");
  }
  const Label leaves = per_depth[deepest];

  // Spine and root alternate from the deep end: n-1, L, n-2, L+1, ...
  std::vector<Label> g(p.size());
  Label next_leaf = 0;
  for (Vertex v = 0; v < p.size(); ++v) {
    if (depth[v] == deepest) {
      g[v] = next_leaf++;
      continue;
    }
    const int pos = (q - 2) - depth[v];
    g[v] = pos % 2 == 0 ? n - 1 - pos / 2 : leaves + (pos - 1) / 2;
  }
  Labelling out(std::move(g));

  auto induced = edge_labels(p, out);
  std::sort(induced.begin(), induced.end());
  const Label run_start = n - (p.size() - 1);
  for (std::size_t i = 0; i < induced.size(); ++i) {
    if (induced[i] != run_start + static_cast<Label>(i)) {
      throw std::logic_error("broom labelling does not induce the top run of edge labels");
    }
  }
  return out;
}

std::vector<Vertex> branch_automorphism(const RootedSymmetricTree& t, Vertex from, Vertex to) {
  if (t.level_of(from) != t.level_of(to)) {
    throw std::invalid_argument("branch automorphism needs two vertices on the same level");
  }
  const auto x = t.address_of(from).indices;
  const auto y = t.address_of(to).indices;
  std::vector<Vertex> phi(t.size());
  for (Vertex v = 0; v < t.size(); ++v) {
    VertexAddress z = t.address_of(v);
    bool on_path = true;
    // Indices below the depth of `from` are left as they are.
    for (std::size_t i = 0; i < std::min(z.indices.size(), x.size()) && on_path; ++i) {
      if (z.indices[i] == x[i]) {
        z.indices[i] = y[i];
      } else {
        if (z.indices[i] == y[i]) z.indices[i] = x[i];
        on_path = false;
      }
    }
    phi[v] = t.index_of(z);
  }
  return phi;
}

namespace {

template <class T>
bool unsupported(const Constructed<T>& c) {
  return std::holds_alternative<Unsupported>(c);
}

Labelling merge(Vertex n, const BroomDecomposition& d, const Labelling& broom, const Labelling& sub) {
  if (broom[0] != sub[0]) {
    throw std::logic_error("broom and subtree disagree on the root label");
  }
  Labelling whole(std::vector<Label>(n, 0));
  embed(broom, d.caterpillar_to_tree, whole);
  embed(sub, d.subtree_to_tree, whole);
  return whole;
}

Labelling subtree_label(const BroomDecomposition& d) {
  return d.subtree ? algebraic_label(*d.subtree) : Labelling({0});
}

Labelling star_label(Vertex n, Label centre, Vertex zero_leaf) {
  std::vector<Label> labels(n);
  labels[0] = centre;
  if (centre == 0) {
    for (Vertex v = 1; v < n; ++v) labels[v] = v;
  } else {
    Label next = 1;
    for (Vertex v = 1; v < n; ++v) labels[v] = v == zero_leaf ? 0 : next++;
  }
  return Labelling(std::move(labels));
}

void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace

Constructed<Construction> compose_broom_and_subtree(const RootedSymmetricTree& t, int level, Label desired,
                                                   std::optional<Vertex> target) {
  const int q = t.levels();
  const Vertex n = t.size();
  if (level != q && level != q - 1) {
    throw std::invalid_argument("composition targets only the last two levels");
  }
  if (desired != 0 && desired != n - 1) {
    throw std::invalid_argument("desired label must be 0 or n-1");
  }
  if (target && t.level_of(*target) != level) {
    throw std::invalid_argument("target vertex is not on the requested level");
  }
  if (q < 3) {
    return Unsupported{UnsupportedReason::kNotBroom, "stars have no broom branch"};
  }

  auto decomposed = decompose(t);
  if (unsupported(decomposed)) return std::get<Unsupported>(decomposed);
  const auto& d = std::get<BroomDecomposition>(decomposed);

  const Parity parity = q % 2 == 1 ? Parity::kOdd : Parity::kEven;
  auto broom = label_broom(d, parity, n);
  if (unsupported(broom)) return std::get<Unsupported>(broom);
  const auto& g = std::get<Labelling>(broom);

  Construction out;
  out.trace.method = parity == Parity::kOdd ? ConstructionMethod::kTheorem2Odd : ConstructionMethod::kTheorem2Even;
  auto& steps = out.trace.steps;
  steps.push_back({.kind = StepKind::kBroom, .value = q, .note = "label broom branch P on " +
                                                                   std::to_string(d.caterpillar_size()) + " vertices"});

  Labelling h = subtree_label(d);
  steps.push_back({.kind = StepKind::kSubtreeClosedForm,
                   .note = "closed-form labelling of H on " + std::to_string(d.subtree_size()) + " vertices"});
  const Label deep_degree = t.sequence().degrees().back();
  if (parity == Parity::kOdd) {
    const Label offset = deep_degree + (q - 3) / 2;
    h = shift(h, offset);
    steps.push_back({.kind = StepKind::kShift, .value = offset, .note = "shift H labels by " + std::to_string(offset)});
  } else {
    const Label pivot = n - q / 2;
    h = reflect(h, pivot);
    steps.push_back(
        {.kind = StepKind::kReflect, .value = pivot, .note = "reflect H labels about " + std::to_string(pivot)});
  }
  out.labelling = merge(n, d, g, h);
  steps.push_back({.kind = StepKind::kMerge, .note = "identify the roots of P and H"});

  // Leaf of P labelled 0 and its spine neighbour labelled n-1.
  const Vertex zero_leaf = d.caterpillar_to_tree[d.caterpillar_size() - (t.sequence().degrees().back())];
  const Vertex natural = level == q ? zero_leaf : t.parent(zero_leaf);
  const Label natural_label = level == q ? 0 : n - 1;
  if (natural_label != desired) {
    out.labelling = complement(out.labelling);
    steps.push_back({.kind = StepKind::kComplement, .note = "swap 0 and n-1 by complementing"});
  }
  if (target && *target != natural) {
    out.labelling = transport(out.labelling, branch_automorphism(t, natural, *target));
    steps.push_back({.kind = StepKind::kRemap,
                     .from = natural,
                     .to = *target,
                     .note = "move labels by the branch automorphism " + std::to_string(natural) + " -> " +
                             std::to_string(*target)});
  }
  ensure(is_graceful(t.general(), out.labelling), "composition produced a non-graceful labelling");
  ensure(out.labelling[target.value_or(natural)] == desired, "composition misplaced the desired label");
  return out;
}

Constructed<TranspositionProduct> leaf_transpositions(const RootedSymmetricTree& t) {
  if (t.levels() != 3) {
    return Unsupported{UnsupportedReason::kWrongLevelCount,
                       "leaf transpositions need exactly 3 levels, tree has " + std::to_string(t.levels())};
  }
  const Label k1 = t.sequence().degrees()[0];
  const Label k2 = t.sequence().degrees()[1];
  const Label h2 = t.level_number(2);
  std::vector<std::pair<Label, Label>> swaps;
  for (Label j = 0; j < k1; ++j) swaps.emplace_back(j * h2, j * h2 + k2);
  return TranspositionProduct(std::move(swaps));
}

Constructed<Labelling> transposition_label(const RootedSymmetricTree& t) {
  auto product = leaf_transpositions(t);
  if (unsupported(product)) return std::get<Unsupported>(product);
  return apply_permutation(algebraic_label(t), std::get<TranspositionProduct>(product));
}

Constructed<Construction> transposition_construction(const RootedSymmetricTree& t) {
  auto product = leaf_transpositions(t);
  if (unsupported(product)) return std::get<Unsupported>(product);
  const auto& swaps = std::get<TranspositionProduct>(product);
  Construction out{algebraic_label(t), {ConstructionMethod::kLemma1, {}}};
  out.trace.steps.push_back({.kind = StepKind::kClosedForm, .note = "closed-form labelling, root gets 0"});
  out.labelling = apply_permutation(out.labelling, swaps);
  out.trace.steps.push_back(
      {.kind = StepKind::kTranspositions, .swaps = swaps.swaps(), .note = "apply " + swaps.to_string()});
  return out;
}

Construction algebraic_construction(const RootedSymmetricTree& t) {
  Construction out{algebraic_label(t), {ConstructionMethod::kTheorem1, {}}};
  out.trace.steps.push_back({.kind = StepKind::kClosedForm, .note = "closed-form labelling, root gets 0"});
  return out;
}

Constructed<Construction> zero_at(const ZeroAtRequest& request) {
  if (request.tree == nullptr) throw std::invalid_argument("zero_at request without a tree");
  const RootedSymmetricTree& t = *request.tree;
  const Vertex n = t.size();
  const Vertex target = request.target;
  if (target < 0 || target >= n) throw std::out_of_range("target vertex out of range");
  if (request.desired_label != 0 && request.desired_label != n - 1) {
    throw std::invalid_argument("desired label must be 0 or n-1");
  }
  const int q = t.levels();
  const int level = t.level_of(target);

  Construction out;
  auto& steps = out.trace.steps;
  if (q == 2) {
    out.trace.method = ConstructionMethod::kStarDirect;
    const Label centre = level == 1 ? 0 : n - 1;
    out.labelling = star_label(n, centre, target);
    steps.push_back({.kind = StepKind::kStar,
                     .value = centre,
                     .to = level == 1 ? -1 : target,
                     .note = "star with centre " + std::to_string(centre)});
  } else if (level == 1) {
    out.trace.method = ConstructionMethod::kTheorem1;
    out.labelling = algebraic_label(t);
    steps.push_back({.kind = StepKind::kClosedForm, .note = "closed-form labelling, root gets 0"});
  } else if (level == 2) {
    out.trace.method = ConstructionMethod::kComplementOf;
    out.labelling = complement(algebraic_label(t));
    steps.push_back({.kind = StepKind::kClosedForm, .note = "closed-form labelling, vertex 1 gets n-1"});
    steps.push_back({.kind = StepKind::kComplement, .note = "complement moves 0 to vertex 1"});
    const Vertex natural = t.level_offset(2);
    if (target != natural) {
      out.labelling = transport(out.labelling, branch_automorphism(t, natural, target));
      steps.push_back({.kind = StepKind::kRemap,
                       .from = natural,
                       .to = target,
                       .note = "move labels by the branch automorphism " + std::to_string(natural) + " -> " +
                               std::to_string(target)});
    }
  } else if (level >= q - 1) {
    auto composed = compose_broom_and_subtree(t, level, 0, target);
    if (unsupported(composed)) return std::get<Unsupported>(composed);
    out = std::move(std::get<Construction>(composed));
  } else {
    return Unsupported{UnsupportedReason::kNoConstruction,
                       "no construction for level " + std::to_string(level) + " of a " + std::to_string(q) +
                           "-level tree"};
  }

  if (request.desired_label != 0) {
    out.labelling = complement(out.labelling);
    steps.push_back({.kind = StepKind::kComplement, .note = "complement so the target gets n-1"});
  }
  ensure(is_graceful(t.general(), out.labelling), "construction produced a non-graceful labelling");
  ensure(out.labelling[target] == request.desired_label, "construction misplaced the desired label");
  return out;
}

Labelling replay(const RootedSymmetricTree& t, const ConstructionTrace& trace) {
  const Vertex n = t.size();
  Labelling whole(std::vector<Label>(n, 0));
  Labelling broom;
  Labelling sub;
  std::optional<BroomDecomposition> d;
  auto need_decomposition = [&]() -> const BroomDecomposition& {
    if (!d) {
      auto result = decompose(t);
      if (unsupported(result)) throw std::invalid_argument("trace needs a decomposition the tree does not have");
      d = std::move(std::get<BroomDecomposition>(result));
    }
    return *d;
  };

  for (const auto& step : trace.steps) {
    switch (step.kind) {
      case StepKind::kClosedForm:
        whole = algebraic_label(t);
        break;
      case StepKind::kTranspositions:
        whole = apply_permutation(whole, TranspositionProduct(step.swaps));
        break;
      case StepKind::kBroom: {
        auto g = label_broom(need_decomposition(), step.value % 2 == 1 ? Parity::kOdd : Parity::kEven, n);
        if (unsupported(g)) throw std::invalid_argument("trace labels a broom the tree does not have");
        broom = std::get<Labelling>(g);
        break;
      }
      case StepKind::kSubtreeClosedForm:
        sub = subtree_label(need_decomposition());
        break;
      case StepKind::kShift:
        sub = shift(sub, step.value);
        break;
      case StepKind::kReflect:
        sub = reflect(sub, step.value);
        break;
      case StepKind::kMerge:
        whole = merge(n, need_decomposition(), broom, sub);
        break;
      case StepKind::kComplement:
        whole = complement(whole);
        break;
      case StepKind::kRemap:
        whole = transport(whole, branch_automorphism(t, step.from, step.to));
        break;
      case StepKind::kStar:
        whole = star_label(n, step.value, step.to);
        break;
    }
  }
  return whole;
}

}  // namespace graceful
