#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library's labelling, search or orbit code.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

/// Sum formula h_i = 1 + k_i + k_i k_{i+1} + ... + k_i ... k_{q-1}.
inline std::vector<std::int64_t> level_numbers_by_sum(const std::vector<std::int64_t>& k) {
  const std::size_t q = k.size() + 1;
  std::vector<std::int64_t> h(q);
  for (std::size_t i = 0; i < q; ++i) {
    std::int64_t total = 1;
    std::int64_t product = 1;
    for (std::size_t j = i; j + 1 < q; ++j) {
      product *= k[j];
      total += product;
    }
    h[i] = total;
  }
  return h;
}

inline bool graceful(int n, const EdgeList& edges, const std::vector<int>& labels) {
  std::vector<char> vertex_seen(n, 0);
  for (int b : labels) {
    if (b < 0 || b >= n || vertex_seen[b]) return false;
    vertex_seen[b] = 1;
  }
  std::vector<char> edge_seen(n, 0);
  for (auto [u, v] : edges) {
    const int d = std::abs(labels[u] - labels[v]);
    if (d == 0 || edge_seen[d]) return false;
    edge_seen[d] = 1;
  }
  return true;
}

/// Graceful labellings among all n! bijections.
inline std::uint64_t naive_count(int n, const EdgeList& edges) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::uint64_t count = 0;
  do {
    if (graceful(n, edges, labels)) ++count;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return count;
}

/// Whether some graceful bijection puts `label` on `vertex`.
inline bool naive_exists(int n, const EdgeList& edges, int vertex, int label) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  do {
    if ((vertex < 0 || labels[vertex] == label) && graceful(n, edges, labels)) return true;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return false;
}

/// Orbits from every adjacency-preserving vertex permutation, as a set of
/// sorted vertex classes.
inline std::set<std::vector<int>> brute_force_orbits(int n, const EdgeList& edges) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool automorphism = true;
    for (auto [u, v] : edges) {
      if (!adj[perm[u]][perm[v]]) {
        automorphism = false;
        break;
      }
    }
    if (!automorphism) continue;
    for (int v = 0; v < n; ++v) parent[find(v)] = find(perm[v]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<int>> classes(n);
  for (int v = 0; v < n; ++v) classes[find(v)].push_back(v);
  std::set<std::vector<int>> out;
  for (auto& c : classes) {
    if (!c.empty()) out.insert(c);
  }
  return out;
}

/// All labelled trees on n vertices from Pruefer sequences (n >= 2).
inline std::vector<EdgeList> labelled_trees(int n) {
  std::vector<EdgeList> out;
  if (n == 2) return {{{0, 1}}};
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    EdgeList edges;
    for (int x : seq) {
      for (int leaf = 0; leaf < n; ++leaf) {
        if (degree[leaf] == 1) {
          edges.emplace_back(leaf, x);
          --degree[leaf];
          --degree[x];
          break;
        }
      }
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        if (u < 0) {
          u = v;
        } else {
          edges.emplace_back(u, v);
        }
      }
    }
    out.push_back(edges);
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

}  // namespace oracle
