#include <gtest/gtest.h>

#include <vector>

#include "graceful/constructive.hpp"
#include "graceful/search.hpp"
#include "oracles.hpp"

namespace graceful {
namespace {

GeneralTree path(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return GeneralTree(n, edges);
}

GeneralTree star(Vertex leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return GeneralTree(leaves + 1, edges);
}

oracle::EdgeList edge_list(const GeneralTree& t) { return oracle::EdgeList(t.edges().begin(), t.edges().end()); }

TEST(FindGracefulTest, PinnedPath) {
  SearchConstraints c;
  c.pins = {{1, 0}};
  auto out = find_graceful(path(4), c);
  ASSERT_EQ(out.status, SearchStatus::kFound);
  EXPECT_EQ((*out.witness)[1], 0);
  EXPECT_TRUE(is_graceful(path(4), *out.witness));
}

TEST(FindGracefulTest, StarLeafPinnedToZero) {
  SearchConstraints c;
  c.pins = {{2, 0}};
  auto out = find_graceful(star(3), c);
  ASSERT_EQ(out.status, SearchStatus::kFound);
  EXPECT_EQ((*out.witness)[0], 3);
  EXPECT_EQ((*out.witness)[2], 0);
}

TEST(FindGracefulTest, InconsistentPinsAreRejected) {
  SearchConstraints both_zero;
  both_zero.pins = {{0, 0}, {1, 0}};
  EXPECT_THROW(find_graceful(path(2), both_zero), std::invalid_argument);
  SearchConstraints out_of_range;
  out_of_range.pins = {{0, 5}};
  EXPECT_THROW(find_graceful(path(2), out_of_range), std::invalid_argument);
  SearchConstraints twice;
  twice.pins = {{0, 0}, {0, 1}};
  EXPECT_THROW(find_graceful(path(3), twice), std::invalid_argument);
}

TEST(FindGracefulTest, ImpossiblePinExhausts) {
  // The centre of a star must carry 0 or n-1.
  SearchConstraints c;
  c.pins = {{0, 1}};
  auto out = find_graceful(star(4), c);
  EXPECT_EQ(out.status, SearchStatus::kExhausted);
  EXPECT_FALSE(out.witness.has_value());
}

TEST(FindGracefulTest, ForbiddenPairsAreAvoided) {
  SearchConstraints c;
  c.forbid = {{0, 0}, {0, 3}};
  EXPECT_EQ(find_graceful(star(3), c).status, SearchStatus::kExhausted);
  c.forbid = {{0, 0}};
  auto out = find_graceful(star(3), c);
  ASSERT_EQ(out.status, SearchStatus::kFound);
  EXPECT_EQ((*out.witness)[0], 3);
}

TEST(FindGracefulTest, Deterministic) {
  auto t = RootedSymmetricTree(DaughterDegreeSequence({3, 1, 1, 1})).general();
  SearchConstraints c;
  c.pins = {{4, 0}};
  auto a = find_graceful(t, c);
  auto b = find_graceful(t, c);
  ASSERT_EQ(a.status, SearchStatus::kFound);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(FindGracefulTest, NodeBudgetGivesTimeout) {
  auto t = path(30);
  SearchConstraints c;
  c.pins = {{7, 0}};
  c.node_budget = 5;
  auto out = find_graceful(t, c);
  EXPECT_EQ(out.status, SearchStatus::kTimeout);
  EXPECT_FALSE(out.witness.has_value());
}

TEST(FindGracefulTest, CompleteForSinglePinsOnSmallTrees) {
  for (Vertex n = 1; n <= 8; ++n) {
    for (const auto& t : free_trees(n)) {
      ASSERT_EQ(find_graceful(t).status, SearchStatus::kFound);
      const auto edges = edge_list(t);
      const auto orbits = vertex_orbits(t);
      for (std::size_t o = 0; o < orbits.count(); ++o) {
        const Vertex v = orbits.representative(o);
        for (Label b = 0; b < n; ++b) {
          SearchConstraints c;
          c.pins = {{v, b}};
          auto out = find_graceful(t, c);
          ASSERT_EQ(out.status == SearchStatus::kFound, oracle::naive_exists(n, edges, v, static_cast<int>(b)))
              << "n=" << n << " v=" << v << " b=" << b;
          if (out.witness) ASSERT_EQ((*out.witness)[v], b);
        }
      }
    }
  }
}

TEST(CountGracefulTest, SmallExamples) {
  EXPECT_EQ(count_graceful(GeneralTree(1, {})), 1u);
  EXPECT_EQ(count_graceful(path(2)), 2u);
  EXPECT_EQ(count_graceful(path(3)), 4u);
  EXPECT_EQ(count_graceful(star(3)), 12u);
  EXPECT_EQ(count_graceful(star(3)), oracle::naive_count(4, edge_list(star(3))));
}

TEST(CountGracefulTest, MatchesNaiveEnumerationUpToSeven) {
  for (Vertex n = 1; n <= 7; ++n) {
    for (const auto& t : free_trees(n)) {
      ASSERT_EQ(count_graceful(t), oracle::naive_count(n, edge_list(t))) << canonical_code(t);
    }
  }
}

TEST(CountGracefulTest, SizeGuard) {
  EXPECT_THROW(count_graceful(path(11)), std::invalid_argument);
  CountOptions forced;
  forced.force = true;
  EXPECT_GT(count_graceful(path(11), forced), 0u);
}

TEST(RotatabilityTest, PathAndStar) {
  auto p = is_zero_rotatable(path(7), {}, "path7");
  EXPECT_EQ(p.entries.size(), 4u);
  EXPECT_TRUE(p.all_yes());
  EXPECT_EQ(p.tree_id, "path7");
  auto s = is_zero_rotatable(star(3));
  EXPECT_EQ(s.entries.size(), 2u);
  EXPECT_TRUE(s.all_yes());
  for (const auto& e : s.entries) {
    ASSERT_TRUE(e.witness.has_value());
    EXPECT_EQ((*e.witness)[e.representative], 0);
    EXPECT_TRUE(is_graceful(star(3), *e.witness));
  }
}

TEST(RotatabilityTest, AgreesWithNaiveOracleOnSmallTrees) {
  for (Vertex n = 2; n <= 8; ++n) {
    for (const auto& t : free_trees(n)) {
      auto report = is_zero_rotatable(t);
      const auto edges = edge_list(t);
      for (const auto& e : report.entries) {
        const bool yes = oracle::naive_exists(n, edges, e.representative, 0);
        ASSERT_EQ(e.verdict, yes ? Verdict::kYes : Verdict::kNo);
      }
    }
  }
}

TEST(RotatabilityTest, ComplementCertificationMatchesPlainSearch) {
  auto t = RootedSymmetricTree(DaughterDegreeSequence({2, 2, 2})).general();
  RotatabilityOptions plain;
  plain.use_complement = false;
  auto a = is_zero_rotatable(t);
  auto b = is_zero_rotatable(t, plain);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) EXPECT_EQ(a.entries[i].verdict, b.entries[i].verdict);
  for (const auto& e : b.entries) EXPECT_EQ(e.source, VerdictSource::kSearch);
}

TEST(RotatabilityTest, ParallelBatchesGiveTheSameReport) {
  auto t = RootedSymmetricTree(DaughterDegreeSequence({3, 1, 1, 1})).general();
  RotatabilityOptions serial;
  RotatabilityOptions parallel;
  parallel.jobs = 3;
  auto a = is_zero_rotatable(t, serial);
  auto b = is_zero_rotatable(t, parallel);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].verdict, b.entries[i].verdict);
    EXPECT_EQ(a.entries[i].witness, b.entries[i].witness);
  }
}

TEST(RotatabilityTest, TinyBudgetIsInconclusive) {
  RotatabilityOptions starved;
  starved.node_budget = 1;
  starved.use_complement = false;
  auto r = is_zero_rotatable(path(20), starved);
  EXPECT_TRUE(r.any_timeout());
  EXPECT_FALSE(r.all_yes());
  EXPECT_FALSE(r.any_no());
}

TEST(MoveZeroTest, FollowsAutomorphisms) {
  auto t = RootedSymmetricTree(DaughterDegreeSequence({2, 3}));
  auto f = std::get<Labelling>(transposition_label(t));
  const Vertex zero = f.inverse()[0];
  const auto orbits = vertex_orbits(t.general());
  for (Vertex target : orbits.orbits[orbits.orbit_of[zero]]) {
    auto g = move_zero(t.general(), f, zero, target);
    EXPECT_EQ(g[target], 0);
    EXPECT_TRUE(is_graceful(t.general(), g));
  }
}

}  // namespace
}  // namespace graceful
