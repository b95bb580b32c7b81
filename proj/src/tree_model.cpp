#include "graceful/tree_model.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace graceful {

const char* to_string(UnsupportedReason reason) {
  switch (reason) {
    case UnsupportedReason::kNotCaterpillar: return "NotCaterpillar";
    case UnsupportedReason::kNotBroom: return "NotBroom";
    case UnsupportedReason::kWrongLevelCount: return "WrongLevelCount";
    case UnsupportedReason::kNoConstruction: return "NoConstruction";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// DaughterDegreeSequence

DaughterDegreeSequence::DaughterDegreeSequence(std::vector<std::int64_t> degrees)
    : degrees_(std::move(degrees)) {
  if (degrees_.empty()) {
    throw std::invalid_argument("daughter degree sequence must not be empty");
  }
  for (std::int64_t k : degrees_) {
    if (k < 1) {
      throw std::invalid_argument("daughter degrees must be positive");
    }
  }
}

std::int64_t DaughterDegreeSequence::daughters(int level) const {
  if (level < 1 || level > levels()) {
    throw std::out_of_range("level out of range");
  }
  return level == levels() ? 1 : degrees_[level - 1];
}

std::string DaughterDegreeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(degrees_[i]);
  }
  return out;
}

std::vector<std::int64_t> level_numbers(const DaughterDegreeSequence& seq) {
  const int q = seq.levels();
  std::vector<std::int64_t> h(q, 1);
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  for (int i = q - 1; i >= 1; --i) {
    const std::int64_t k = seq.degrees()[i - 1];
    if (h[i] > (kMax - 1) / k) {
      throw std::overflow_error("tree too large: level numbers overflow 64 bits");
    }
    h[i - 1] = 1 + k * h[i];
  }
  return h;
}

// ---------------------------------------------------------------------------
// GeneralTree

GeneralTree::GeneralTree(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) {
    throw std::invalid_argument("a tree needs at least one vertex");
  }
  if (edges_.size() != static_cast<std::size_t>(n_ - 1)) {
    throw std::invalid_argument("a tree on n vertices has exactly n-1 edges");
  }
  std::vector<Vertex> degree(n_, 0);
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop in tree");
    }
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(n_ + 1, 0);
  for (Vertex v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<Vertex> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (Vertex v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }

  // n-1 edges plus connectivity implies acyclic.
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : neighbours(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n_) {
    throw std::invalid_argument("edge list is not a tree (disconnected or cyclic)");
  }
}

std::span<const Vertex> GeneralTree::neighbours(Vertex v) const {
  return {adjacency_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

bool GeneralTree::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

// ---------------------------------------------------------------------------
// RootedSymmetricTree

namespace {

std::vector<Vertex> level_offsets(const DaughterDegreeSequence& seq, std::int64_t n) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw std::length_error("tree too large to materialise");
  }
  const int q = seq.levels();
  std::vector<Vertex> offsets(q + 1, 0);
  std::int64_t width = 1;
  for (int r = 1; r <= q; ++r) {
    offsets[r] = offsets[r - 1] + static_cast<Vertex>(width);
    if (r < q) width *= seq.degrees()[r - 1];
  }
  return offsets;
}

GeneralTree build_general(const std::vector<Vertex>& offsets, const DaughterDegreeSequence& seq) {
  const Vertex n = offsets.back();
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int r = 2; r < static_cast<int>(offsets.size()); ++r) {
    const auto k = static_cast<Vertex>(seq.degrees()[r - 2]);
    for (Vertex v = offsets[r - 1]; v < offsets[r]; ++v) {
      edges.emplace_back(offsets[r - 2] + (v - offsets[r - 1]) / k, v);
    }
  }
  return GeneralTree(n, std::move(edges));
}

}  // namespace

RootedSymmetricTree::RootedSymmetricTree(DaughterDegreeSequence seq)
    : seq_(std::move(seq)),
      level_numbers_(graceful::level_numbers(seq_)),
      offsets_(level_offsets(seq_, level_numbers_.front())),
      general_(build_general(offsets_, seq_)) {}

int RootedSymmetricTree::level_of(Vertex v) const {
  if (v < 0 || v >= size()) throw std::out_of_range("vertex out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), v);
  return static_cast<int>(it - offsets_.begin());
}

VertexAddress RootedSymmetricTree::address_of(Vertex v) const {
  const int r = level_of(v);
  VertexAddress address;
  address.indices.resize(r - 1);
  std::int64_t local = v - offsets_[r - 1];
  for (int i = r - 1; i >= 1; --i) {
    const std::int64_t k = seq_.degrees()[i - 1];
    address.indices[i - 1] = local % k;
    local /= k;
  }
  return address;
}

Vertex RootedSymmetricTree::index_of(const VertexAddress& address) const {
  const int r = address.level();
  if (r > levels()) throw std::invalid_argument("address deeper than the tree");
  std::int64_t local = 0;
  for (int i = 1; i < r; ++i) {
    const std::int64_t k = seq_.degrees()[i - 1];
    const std::int64_t x = address.indices[i - 1];
    if (x < 0 || x >= k) throw std::invalid_argument("edge index out of range for its level");
    local = local * k + x;
  }
  return offsets_[r - 1] + static_cast<Vertex>(local);
}

Vertex RootedSymmetricTree::parent(Vertex v) const {
  const int r = level_of(v);
  if (r == 1) return -1;
  const auto k = static_cast<Vertex>(seq_.degrees()[r - 2]);
  return offsets_[r - 2] + (v - offsets_[r - 1]) / k;
}

GeneralTree to_general(const RootedSymmetricTree& t) { return t.general(); }

// ---------------------------------------------------------------------------
// classify

namespace {

bool is_symmetric_spider(const GeneralTree& t, bool is_path) {
  if (is_path) return true;
  Vertex branch = -1;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (t.degree(v) > 2) branch = v;
  }
  Vertex leg_length = -1;
  for (Vertex start : t.neighbours(branch)) {
    Vertex prev = branch;
    Vertex cur = start;
    Vertex length = 1;
    while (t.degree(cur) == 2) {
      auto nb = t.neighbours(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++length;
    }
    if (leg_length == -1) leg_length = length;
    if (length != leg_length) return false;
  }
  return true;
}

bool is_banana_at(const GeneralTree& t, Vertex v) {
  Vertex star_degree = -1;
  for (Vertex a : t.neighbours(v)) {
    if (t.degree(a) != 2) return false;
    auto nb = t.neighbours(a);
    Vertex center = nb[0] == v ? nb[1] : nb[0];
    if (t.degree(center) < 2) return false;
    for (Vertex leaf : t.neighbours(center)) {
      if (leaf != a && t.degree(leaf) != 1) return false;
    }
    if (star_degree == -1) star_degree = t.degree(center);
    if (t.degree(center) != star_degree) return false;
  }
  return star_degree != -1;
}

}  // namespace

StructureFlags classify(const GeneralTree& t) {
  StructureFlags flags;
  const Vertex n = t.size();
  Vertex max_degree = 0;
  Vertex branch_points = 0;
  for (Vertex v = 0; v < n; ++v) {
    max_degree = std::max(max_degree, t.degree(v));
    if (t.degree(v) > 2) ++branch_points;
  }
  flags.is_path = max_degree <= 2;

  flags.is_caterpillar = true;
  for (Vertex v = 0; v < n && flags.is_caterpillar; ++v) {
    if (t.degree(v) < 2) continue;
    Vertex inner = 0;
    for (Vertex w : t.neighbours(v)) {
      if (t.degree(w) >= 2) ++inner;
    }
    if (inner > 2) flags.is_caterpillar = false;
  }

  flags.is_spider = branch_points <= 1;
  flags.is_symmetric_spider = flags.is_spider && is_symmetric_spider(t, flags.is_path);

  for (Vertex v = 0; v < n && !flags.is_symmetric_banana; ++v) {
    flags.is_symmetric_banana = is_banana_at(t, v);
  }
  return flags;
}

// ---------------------------------------------------------------------------
// decompose

Constructed<BroomDecomposition> decompose(const RootedSymmetricTree& t) {
  const auto& k = t.sequence().degrees();
  const Vertex n = t.size();
  const std::int64_t last_branch = k[0] - 1;

  BroomDecomposition d;
  d.caterpillar_to_tree.push_back(0);
  d.subtree_to_tree.push_back(0);
  for (Vertex v = 1; v < n; ++v) {
    // BFS order is preserved by filtering on the first address index.
    Vertex up = v;
    while (t.parent(up) != 0) up = t.parent(up);
    if (up - 1 == last_branch) {
      d.caterpillar_to_tree.push_back(v);
    } else {
      d.subtree_to_tree.push_back(v);
    }
  }

  std::vector<Vertex> local(n, -1);
  for (std::size_t i = 0; i < d.caterpillar_to_tree.size(); ++i) {
    local[d.caterpillar_to_tree[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < d.caterpillar_to_tree.size(); ++i) {
    edges.emplace_back(local[t.parent(d.caterpillar_to_tree[i])], static_cast<Vertex>(i));
  }
  d.caterpillar = GeneralTree(static_cast<Vertex>(d.caterpillar_to_tree.size()), std::move(edges));

  if (!classify(d.caterpillar).is_caterpillar) {
    return Unsupported{UnsupportedReason::kNotCaterpillar,
                       "removing all but the last root branch of (" + t.sequence().to_string() +
                           ") leaves a branch that is not a caterpillar"};
  }
  if (k[0] > 1) {
    std::vector<std::int64_t> rest = k;
    rest[0] -= 1;
    d.subtree.emplace(DaughterDegreeSequence(std::move(rest)));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Canonical codes and orbits

namespace {

// Assigns integer ids to rooted tree shapes; ids are comparable across every
// rooting computed with the same instance.
class ShapeIds {
 public:
  // Shape id of every vertex when t is rooted at root; parent filled in too.
  std::vector<int> rooted(const GeneralTree& t, Vertex root, std::vector<Vertex>* parent_out = nullptr) {
    const Vertex n = t.size();
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> order;
    order.reserve(n);
    order.push_back(root);
    parent[root] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Vertex w : t.neighbours(order[i])) {
        if (parent[w] == -1) {
          parent[w] = order[i];
          order.push_back(w);
        }
      }
    }
    std::vector<int> id(n, -1);
    std::vector<int> children;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex u = *it;
      children.clear();
      for (Vertex w : t.neighbours(u)) {
        if (w != parent[u]) children.push_back(id[w]);
      }
      std::sort(children.begin(), children.end());
      auto [pos, inserted] = ids_.try_emplace(children, static_cast<int>(ids_.size()));
      id[u] = pos->second;
    }
    if (parent_out != nullptr) {
      parent[root] = -1;
      *parent_out = std::move(parent);
    }
    return id;
  }

 private:
  std::map<std::vector<int>, int> ids_;
};

std::vector<Vertex> centers(const GeneralTree& t) {
  const Vertex n = t.size();
  auto bfs = [&](Vertex src, std::vector<Vertex>& parent) {
    std::vector<Vertex> order{src};
    parent.assign(n, -1);
    parent[src] = src;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Vertex w : t.neighbours(order[i])) {
        if (parent[w] == -1) {
          parent[w] = order[i];
          order.push_back(w);
        }
      }
    }
    return order.back();
  };
  std::vector<Vertex> parent;
  const Vertex a = bfs(0, parent);
  const Vertex b = bfs(a, parent);
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  const std::size_t len = path.size();
  if (len % 2 == 1) return {path[len / 2]};
  return {std::min(path[len / 2 - 1], path[len / 2]), std::max(path[len / 2 - 1], path[len / 2])};
}

}  // namespace

std::string rooted_code(const GeneralTree& t, Vertex root) {
  const Vertex n = t.size();
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order{root};
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbours(order[i])) {
      if (parent[w] == -1) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::string> code(n);
  std::vector<std::string> children;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    children.clear();
    for (Vertex w : t.neighbours(u)) {
      if (w != parent[u]) children.push_back(std::move(code[w]));
    }
    std::sort(children.begin(), children.end());
    std::string s = "(";
    for (auto& c : children) s += c;
    s += ')';
    code[u] = std::move(s);
  }
  return code[root];
}

std::string canonical_code(const GeneralTree& t) {
  auto c = centers(t);
  std::string best = rooted_code(t, c[0]);
  if (c.size() == 2) best = std::min(best, rooted_code(t, c[1]));
  return best;
}

OrbitPartition vertex_orbits(const GeneralTree& t) {
  const Vertex n = t.size();
  ShapeIds ids;
  std::vector<int> root_shape(n);
  for (Vertex v = 0; v < n; ++v) root_shape[v] = ids.rooted(t, v)[v];

  OrbitPartition partition;
  partition.orbit_of.assign(n, 0);
  std::map<int, std::size_t> orbit_index;
  for (Vertex v = 0; v < n; ++v) {
    auto [it, inserted] = orbit_index.try_emplace(root_shape[v], partition.orbits.size());
    if (inserted) partition.orbits.emplace_back();
    partition.orbits[it->second].push_back(v);
    partition.orbit_of[v] = it->second;
  }
  return partition;
}

std::optional<std::vector<Vertex>> automorphism_mapping(const GeneralTree& t, Vertex from, Vertex to) {
  const Vertex n = t.size();
  if (from < 0 || to < 0 || from >= n || to >= n) throw std::out_of_range("vertex out of range");
  ShapeIds ids;
  std::vector<Vertex> parent_from, parent_to;
  auto shape_from = ids.rooted(t, from, &parent_from);
  auto shape_to = ids.rooted(t, to, &parent_to);
  if (shape_from[from] != shape_to[to]) return std::nullopt;

  std::vector<Vertex> phi(n, -1);
  std::vector<std::pair<Vertex, Vertex>> stack{{from, to}};
  std::vector<Vertex> a, b;
  while (!stack.empty()) {
    auto [u, w] = stack.back();
    stack.pop_back();
    phi[u] = w;
    a.clear();
    b.clear();
    for (Vertex c : t.neighbours(u)) {
      if (c != parent_from[u]) a.push_back(c);
    }
    for (Vertex c : t.neighbours(w)) {
      if (c != parent_to[w]) b.push_back(c);
    }
    std::stable_sort(a.begin(), a.end(), [&](Vertex x, Vertex y) { return shape_from[x] < shape_from[y]; });
    std::stable_sort(b.begin(), b.end(), [&](Vertex x, Vertex y) { return shape_to[x] < shape_to[y]; });
    for (std::size_t i = 0; i < a.size(); ++i) stack.emplace_back(a[i], b[i]);
  }
  return phi;
}

std::vector<GeneralTree> free_trees(Vertex n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<GeneralTree> current{GeneralTree(1, {})};
  for (Vertex size = 2; size <= n; ++size) {
    std::vector<GeneralTree> next;
    std::set<std::string> seen;
    for (const auto& t : current) {
      for (Vertex v = 0; v < t.size(); ++v) {
        auto edges = t.edges();
        edges.emplace_back(v, size - 1);
        GeneralTree grown(size, std::move(edges));
        if (seen.insert(canonical_code(grown)).second) next.push_back(std::move(grown));
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace graceful
