#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace graceful {

using Vertex = std::int32_t;
using Label = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Why a construction could not be carried out. Returned, not thrown: these are
/// expected outcomes for trees outside the supported families.
enum class UnsupportedReason {
  kNotCaterpillar,
  kNotBroom,
  kWrongLevelCount,
  kNoConstruction,
};

const char* to_string(UnsupportedReason reason);

struct Unsupported {
  UnsupportedReason reason;
  std::string detail;
};

template <class T>
using Constructed = std::variant<T, Unsupported>;

/// Number of children (k_1, ..., k_{q-1}) of each vertex, level by level.
/// Leaves at level q have no children and are not stored.
class DaughterDegreeSequence {
 public:
  /// Throws std::invalid_argument when empty or when some degree is < 1.
  explicit DaughterDegreeSequence(std::vector<std::int64_t> degrees);

  const std::vector<std::int64_t>& degrees() const { return degrees_; }

  /// Level count q.
  int levels() const { return static_cast<int>(degrees_.size()) + 1; }

  /// k_level for 1 <= level <= q; k_q = 1 by convention.
  std::int64_t daughters(int level) const;

  /// "2,3,4"
  std::string to_string() const;

  friend bool operator==(const DaughterDegreeSequence&, const DaughterDegreeSequence&) = default;

 private:
  std::vector<std::int64_t> degrees_;
};

/// Edge-index path (x_1, ..., x_{r-1}) from the root to a vertex at level r.
struct VertexAddress {
  std::vector<std::int64_t> indices;

  int level() const { return static_cast<int>(indices.size()) + 1; }
  friend bool operator==(const VertexAddress&, const VertexAddress&) = default;
};

/// Subtree sizes (h_1, ..., h_q) below a vertex of each level; h_1 is the vertex
/// count. Throws std::overflow_error if h_1 does not fit in 63 bits.
std::vector<std::int64_t> level_numbers(const DaughterDegreeSequence& seq);

/// Undirected tree over vertices 0..n-1. Construction validates that the edge
/// list is connected and acyclic.
class GeneralTree {
 public:
  GeneralTree() : GeneralTree(1, {}) {}
  GeneralTree(Vertex n, std::vector<Edge> edges);

  Vertex size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const;
  Vertex degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

 private:
  Vertex n_;
  std::vector<Edge> edges_;
  // CSR adjacency, neighbours sorted ascending.
  std::vector<Vertex> offsets_;
  std::vector<Vertex> adjacency_;
};

/// A rooted symmetric tree with breadth-first vertex numbering: root is 0 and
/// vertices of one level are numbered in lexicographic address order.
class RootedSymmetricTree {
 public:
  explicit RootedSymmetricTree(DaughterDegreeSequence seq);

  const DaughterDegreeSequence& sequence() const { return seq_; }
  int levels() const { return seq_.levels(); }
  const std::vector<std::int64_t>& level_numbers() const { return level_numbers_; }
  Vertex size() const { return static_cast<Vertex>(level_numbers_.front()); }

  /// h_level, 1-based.
  std::int64_t level_number(int level) const { return level_numbers_[level - 1]; }
  /// First vertex index of a level and the number of vertices on it.
  Vertex level_offset(int level) const { return offsets_[level - 1]; }
  Vertex level_width(int level) const { return offsets_[level] - offsets_[level - 1]; }

  int level_of(Vertex v) const;
  VertexAddress address_of(Vertex v) const;
  /// Throws std::invalid_argument for an address that does not exist in this tree.
  Vertex index_of(const VertexAddress& address) const;
  /// -1 for the root.
  Vertex parent(Vertex v) const;

  const GeneralTree& general() const { return general_; }

 private:
  DaughterDegreeSequence seq_;
  std::vector<std::int64_t> level_numbers_;
  std::vector<Vertex> offsets_;  // q + 1 entries
  GeneralTree general_;
};

GeneralTree to_general(const RootedSymmetricTree& t);

struct StructureFlags {
  bool is_path = false;
  bool is_caterpillar = false;
  bool is_spider = false;
  bool is_symmetric_spider = false;
  bool is_symmetric_banana = false;
};

StructureFlags classify(const GeneralTree& t);

/// T split into the branch P (root plus the last root branch) and the
/// remaining rooted symmetric subtree H, sharing only the root.
struct BroomDecomposition {
  GeneralTree caterpillar;
  /// Local vertex of P -> vertex of T. Local 0 is the root; the rest follow T's order.
  std::vector<Vertex> caterpillar_to_tree;
  /// (k_1 - 1, k_2, ..., k_{q-1}); nullopt when k_1 = 1 and H is the bare root.
  std::optional<RootedSymmetricTree> subtree;
  /// Local vertex of H -> vertex of T; {0} when H is the bare root.
  std::vector<Vertex> subtree_to_tree;
  Vertex root = 0;

  Vertex caterpillar_size() const { return caterpillar.size(); }
  Vertex subtree_size() const { return static_cast<Vertex>(subtree_to_tree.size()); }
};

Constructed<BroomDecomposition> decompose(const RootedSymmetricTree& t);

/// Automorphism orbits of the vertex set.
struct OrbitPartition {
  /// Each orbit sorted ascending; orbits ordered by their smallest vertex.
  std::vector<std::vector<Vertex>> orbits;
  std::vector<std::size_t> orbit_of;

  Vertex representative(std::size_t orbit) const { return orbits[orbit].front(); }
  std::size_t count() const { return orbits.size(); }
};

OrbitPartition vertex_orbits(const GeneralTree& t);

/// AHU parenthesis code of t rooted at root; equal codes iff rooted-isomorphic.
std::string rooted_code(const GeneralTree& t, Vertex root);

/// Code of the unrooted tree (rooted at its center, minimum over a bicenter).
std::string canonical_code(const GeneralTree& t);

/// An automorphism phi of t with phi(from) = to, as a vertex map, or nullopt
/// when the two vertices lie in different orbits.
std::optional<std::vector<Vertex>> automorphism_mapping(const GeneralTree& t, Vertex from, Vertex to);

/// One representative of every isomorphism class of trees on n vertices.
std::vector<GeneralTree> free_trees(Vertex n);

}  // namespace graceful
