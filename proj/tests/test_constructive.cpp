#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "graceful/constructive.hpp"
#include "oracles.hpp"

namespace graceful {
namespace {

RootedSymmetricTree rst(std::vector<std::int64_t> k) { return RootedSymmetricTree(DaughterDegreeSequence(std::move(k))); }

oracle::EdgeList edge_list(const GeneralTree& t) { return oracle::EdgeList(t.edges().begin(), t.edges().end()); }

template <class T>
T ok(const Constructed<T>& c) {
  if (const auto* u = std::get_if<Unsupported>(&c)) {
    ADD_FAILURE() << "unsupported: " << u->detail;
    return T{};
  }
  return std::get<T>(c);
}

template <class T>
UnsupportedReason reason(const Constructed<T>& c) {
  return std::get<Unsupported>(c).reason;
}

std::vector<Label> sorted(std::vector<Label> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Every daughter sequence with q <= max_q and k_i <= max_k.
std::vector<std::vector<std::int64_t>> sequences(int max_q, std::int64_t max_k) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> k;
  auto visit = [&](auto&& self) -> void {
    if (!k.empty()) out.push_back(k);
    if (static_cast<int>(k.size()) + 1 == max_q) return;
    for (std::int64_t x = 1; x <= max_k; ++x) {
      k.push_back(x);
      self(self);
      k.pop_back();
    }
  };
  visit(visit);
  return out;
}

TEST(AlgebraicLabelTest, WorkedExample) {
  auto t = rst({2, 3, 4});
  auto f = algebraic_label(t);
  const Vertex v = t.index_of(VertexAddress{{1, 2, 3}});
  EXPECT_EQ(f[v], 2);
  EXPECT_EQ(f[0], 0);
  EXPECT_EQ(f[1], 32);
  EXPECT_TRUE(is_graceful(t.general(), f));
}

TEST(AlgebraicLabelTest, PathRootedAtAnEnd) {
  EXPECT_EQ(algebraic_label(rst({1, 1, 1, 1, 1, 1})), Labelling({0, 6, 1, 5, 2, 4, 3}));
}

TEST(AlgebraicLabelTest, GracefulOnEverySmallSequence) {
  int checked = 0;
  for (const auto& k : sequences(5, 4)) {
    auto t = rst(k);
    ASSERT_TRUE(is_graceful(t.general(), algebraic_label(t))) << DaughterDegreeSequence(k).to_string();
    ++checked;
  }
  EXPECT_EQ(checked, 4 + 16 + 64 + 256);
}

TEST(AlgebraicLabelTest, MatchesLevelFormulaIndependently) {
  // Odd level r: sum x_i h_{i+1} + (r-1)/2. Even level r: k_1 h_2 - sum - (r-2)/2.
  for (const auto& k : sequences(4, 3)) {
    auto t = rst(k);
    const auto h = oracle::level_numbers_by_sum(k);
    auto f = algebraic_label(t);
    for (Vertex v = 0; v < t.size(); ++v) {
      const auto a = t.address_of(v);
      const int r = a.level();
      std::int64_t s = 0;
      for (int i = 0; i + 1 < r; ++i) s += a.indices[i] * h[i + 1];
      const std::int64_t expected = r % 2 == 1 ? s + (r - 1) / 2 : k[0] * h[1] - s - (r - 2) / 2;
      ASSERT_EQ(f[v], expected);
    }
  }
}

TEST(BroomTest, ThreeLevelBroomLabels) {
  auto t = rst({3, 4});
  const auto& d = ok(decompose(t));
  const auto& g = ok(label_broom(d, Parity::kOdd, t.size()));
  ASSERT_EQ(g.size(), 6);
  EXPECT_EQ(g[0], 4);   // root
  EXPECT_EQ(g[1], 15);  // internal vertex
  EXPECT_EQ(sorted({g[2], g[3], g[4], g[5]}), (std::vector<Label>{0, 1, 2, 3}));
  EXPECT_EQ(sorted(edge_labels(d.caterpillar, g)), (std::vector<Label>{11, 12, 13, 14, 15}));
}

TEST(BroomTest, SpiderBranch) {
  auto t = rst({3, 1, 1});
  const auto& d = ok(decompose(t));
  const auto& g = ok(label_broom(d, Parity::kEven, t.size()));
  EXPECT_EQ(g[0], 8);
  EXPECT_EQ(sorted(edge_labels(d.caterpillar, g)), (std::vector<Label>{7, 8, 9}));
}

TEST(BroomTest, SmallestOddCase) {
  auto t = rst({2, 1});
  const auto& d = ok(decompose(t));
  EXPECT_EQ(ok(label_broom(d, Parity::kOdd, t.size())), Labelling({1, 4, 0}));
}

TEST(BroomTest, ParityMismatchAndNonBroom) {
  auto t = rst({3, 4});
  const auto& d = ok(decompose(t));
  EXPECT_THROW(label_broom(d, Parity::kEven, t.size()), std::invalid_argument);
  auto caterpillar = rst({2, 2, 3});
  EXPECT_EQ(reason(label_broom(ok(decompose(caterpillar)), Parity::kEven, caterpillar.size())),
            UnsupportedReason::kNotBroom);
}

TEST(BroomTest, EdgeRunIsTheTopBlock) {
  for (const auto& k : sequences(6, 4)) {
    auto t = rst(k);
    if (t.levels() < 3) continue;
    auto decomposed = decompose(t);
    if (std::holds_alternative<Unsupported>(decomposed)) continue;
    const auto& d = std::get<BroomDecomposition>(decomposed);
    auto broom = label_broom(d, t.levels() % 2 == 1 ? Parity::kOdd : Parity::kEven, t.size());
    if (std::holds_alternative<Unsupported>(broom)) continue;
    const auto& g = std::get<Labelling>(broom);
    const Vertex p = d.caterpillar_size();
    std::vector<Label> expected;
    for (Label e = t.size() - p + 1; e <= t.size() - 1; ++e) expected.push_back(e);
    ASSERT_EQ(sorted(edge_labels(d.caterpillar, g)), expected) << DaughterDegreeSequence(k).to_string();
  }
}

TEST(ComposeTest, ThreeLevelExample) {
  auto t = rst({3, 4});
  const auto& c = ok(compose_broom_and_subtree(t, 3, 0));
  EXPECT_EQ(c.trace.method, ConstructionMethod::kTheorem2Odd);
  ASSERT_TRUE(is_graceful(t.general(), c.labelling));
  const auto& d = ok(decompose(t));
  auto h = algebraic_label(*d.subtree);
  for (Vertex v = 1; v < d.subtree_size(); ++v) {
    EXPECT_EQ(c.labelling[d.subtree_to_tree[v]], h[v] + 4);
  }
  std::vector<Label> p_part;
  // The shared root belongs to H.
  for (Vertex v = 1; v < d.caterpillar_size(); ++v) p_part.push_back(c.labelling[d.caterpillar_to_tree[v]]);
  EXPECT_EQ(sorted(p_part), (std::vector<Label>{0, 1, 2, 3, 15}));
  const Vertex zero = c.labelling.inverse()[0];
  EXPECT_EQ(t.level_of(zero), 3);
  // Complementing moves 0 to a level-2 vertex, which is the level-2 construction.
  const auto flipped = complement(c.labelling);
  EXPECT_EQ(t.level_of(flipped.inverse()[0]), 2);
  const auto& level2 = ok(compose_broom_and_subtree(t, 2, 0));
  EXPECT_EQ(level2.labelling, flipped);
}

TEST(ComposeTest, BananaEvenCaseAgreesWithExhaustiveSearch) {
  auto t = rst({2, 1, 2});
  const auto& c = ok(compose_broom_and_subtree(t, 4, 0));
  EXPECT_EQ(c.trace.method, ConstructionMethod::kTheorem2Even);
  ASSERT_TRUE(is_graceful(t.general(), c.labelling));
  const Vertex zero = c.labelling.inverse()[0];
  EXPECT_EQ(t.level_of(zero), 4);
  EXPECT_TRUE(oracle::naive_exists(t.size(), edge_list(t.general()), zero, 0));
}

TEST(ComposeTest, EveryTargetOnTheLastTwoLevels) {
  for (auto k : {std::vector<std::int64_t>{3, 4}, {2, 1, 2}, {3, 1, 1, 1}, {2, 1, 1, 3}, {4, 2}, {1, 3}, {2, 1, 1, 1, 2}}) {
    auto t = rst(k);
    const int q = t.levels();
    for (int level : {q - 1, q}) {
      for (Vertex v = t.level_offset(level); v < t.level_offset(level) + t.level_width(level); ++v) {
        for (Label desired : {Label{0}, Label{t.size() - 1}}) {
          const auto& c = ok(compose_broom_and_subtree(t, level, desired, v));
          ASSERT_TRUE(is_graceful(t.general(), c.labelling));
          ASSERT_EQ(c.labelling[v], desired);
          ASSERT_EQ(replay(t, c.trace), c.labelling);
        }
      }
    }
  }
}

TEST(ComposeTest, Unsupported) {
  EXPECT_EQ(reason(compose_broom_and_subtree(rst({3, 3, 3}), 4, 0)), UnsupportedReason::kNotCaterpillar);
  EXPECT_EQ(reason(compose_broom_and_subtree(rst({4}), 2, 0)), UnsupportedReason::kNotBroom);
  EXPECT_THROW(compose_broom_and_subtree(rst({3, 4}), 1, 0), std::invalid_argument);
  EXPECT_THROW(compose_broom_and_subtree(rst({3, 4}), 3, 5), std::invalid_argument);
}

TEST(LeafTranspositionsTest, Examples) {
  auto t = rst({3, 4});
  const auto& p = ok(leaf_transpositions(t));
  EXPECT_EQ(p.to_string(), "(0 4)(5 9)(10 14)");
  const auto& f = ok(transposition_label(t));
  EXPECT_EQ(f, apply_permutation(algebraic_label(t), p));
  EXPECT_TRUE(is_graceful(t.general(), f));
  EXPECT_EQ(t.level_of(f.inverse()[0]), 3);

  EXPECT_EQ(ok(transposition_label(rst({1, 1}))), Labelling({1, 2, 0}));
  EXPECT_EQ(ok(leaf_transpositions(rst({2, 2}))).to_string(), "(0 2)(3 5)");
  const auto& g = ok(transposition_label(rst({2, 2})));
  EXPECT_TRUE(is_graceful(rst({2, 2}).general(), g));
  EXPECT_EQ(rst({2, 2}).level_of(g.inverse()[0]), 3);

  EXPECT_EQ(reason(leaf_transpositions(rst({2, 3, 4}))), UnsupportedReason::kWrongLevelCount);
  EXPECT_EQ(reason(transposition_label(rst({5}))), UnsupportedReason::kWrongLevelCount);
}

TEST(LeafTranspositionsTest, GracefulForAllThreeLevelTrees) {
  for (std::int64_t a = 1; a <= 6; ++a) {
    for (std::int64_t b = 1; b <= 6; ++b) {
      auto t = rst({a, b});
      const auto& c = ok(transposition_construction(t));
      ASSERT_TRUE(is_graceful(t.general(), c.labelling));
      ASSERT_EQ(t.level_of(c.labelling.inverse()[0]), 3);
      ASSERT_EQ(replay(t, c.trace), c.labelling);
    }
  }
}

TEST(ZeroAtTest, SpiderEveryVertex) {
  auto t = rst({4, 1, 1});
  for (Vertex v = 0; v < t.size(); ++v) {
    const auto& c = ok(zero_at({&t, v, 0}));
    ASSERT_EQ(c.labelling[v], 0);
    ASSERT_TRUE(is_graceful(t.general(), c.labelling));
  }
}

TEST(ZeroAtTest, BananasEveryVertexBothEnds) {
  for (std::int64_t a = 1; a <= 4; ++a) {
    for (std::int64_t b = 1; b <= 4; ++b) {
      auto t = rst({a, 1, b});
      for (Vertex v = 0; v < t.size(); ++v) {
        for (Label desired : {Label{0}, Label{t.size() - 1}}) {
          const auto& c = ok(zero_at({&t, v, desired}));
          ASSERT_EQ(c.labelling[v], desired);
          ASSERT_TRUE(is_graceful(t.general(), c.labelling));
          ASSERT_EQ(replay(t, c.trace), c.labelling);
        }
      }
    }
  }
}

TEST(ZeroAtTest, SecondLevelIsComplementOfClosedForm) {
  auto t = rst({2, 2, 2});
  const auto& c = ok(zero_at({&t, 1, 0}));
  EXPECT_EQ(c.trace.method, ConstructionMethod::kComplementOf);
  EXPECT_EQ(c.labelling, complement(algebraic_label(t)));
}

TEST(ZeroAtTest, StarsAndRoots) {
  auto s = rst({5});
  for (Vertex v = 0; v < s.size(); ++v) {
    const auto& c = ok(zero_at({&s, v, 0}));
    EXPECT_EQ(c.trace.method, ConstructionMethod::kStarDirect);
    EXPECT_EQ(c.labelling[v], 0);
    EXPECT_EQ(replay(s, c.trace), c.labelling);
  }
  auto t = rst({3, 3, 3});
  EXPECT_EQ(ok(zero_at({&t, 0, 0})).trace.method, ConstructionMethod::kTheorem1);
}

TEST(ZeroAtTest, MiddleLevelsAndBadRequests) {
  auto t = rst({3, 1, 1, 1});
  EXPECT_EQ(reason(zero_at({&t, t.level_offset(3), 0})), UnsupportedReason::kNoConstruction);
  auto wide = rst({3, 3, 3});
  EXPECT_EQ(reason(zero_at({&wide, wide.level_offset(4), 0})), UnsupportedReason::kNotCaterpillar);
  EXPECT_THROW(zero_at({nullptr, 0, 0}), std::invalid_argument);
  EXPECT_THROW(zero_at({&t, t.size(), 0}), std::out_of_range);
  EXPECT_THROW(zero_at({&t, 0, 3}), std::invalid_argument);
}

TEST(BranchAutomorphismTest, RootPreservingAndSendsFromToTo) {
  std::mt19937_64 rng(5);
  for (auto k : {std::vector<std::int64_t>{2, 3, 2}, {3, 1, 4}, {2, 2, 2, 2}}) {
    auto t = rst(k);
    for (int trial = 0; trial < 200; ++trial) {
      const int level = 1 + static_cast<int>(rng() % t.levels());
      const Vertex from = t.level_offset(level) + static_cast<Vertex>(rng() % t.level_width(level));
      const Vertex to = t.level_offset(level) + static_cast<Vertex>(rng() % t.level_width(level));
      auto phi = branch_automorphism(t, from, to);
      ASSERT_EQ(phi[from], to);
      ASSERT_EQ(phi[0], 0);
      ASSERT_EQ(std::set<Vertex>(phi.begin(), phi.end()).size(), static_cast<std::size_t>(t.size()));
      for (auto [u, v] : t.general().edges()) ASSERT_TRUE(t.general().adjacent(phi[u], phi[v]));
    }
  }
}

TEST(ReplayTest, ReproducesEveryConstruction) {
  for (const auto& k : sequences(5, 3)) {
    auto t = rst(k);
    auto closed = algebraic_construction(t);
    ASSERT_EQ(replay(t, closed.trace), closed.labelling);
    for (Vertex v = 0; v < t.size(); v += 1 + t.size() / 17) {
      auto c = zero_at({&t, v, 0});
      if (const auto* built = std::get_if<Construction>(&c)) ASSERT_EQ(replay(t, built->trace), built->labelling);
    }
  }
}

TEST(MethodNamesTest, SerialisedNames) {
  EXPECT_STREQ(to_string(ConstructionMethod::kTheorem1), "theorem1");
  EXPECT_STREQ(to_string(ConstructionMethod::kTheorem2Odd), "theorem2_odd");
  EXPECT_STREQ(to_string(ConstructionMethod::kTheorem2Even), "theorem2_even");
  EXPECT_STREQ(to_string(ConstructionMethod::kLemma1), "lemma1");
  EXPECT_STREQ(to_string(ConstructionMethod::kComplementOf), "complement_of");
  EXPECT_STREQ(to_string(ConstructionMethod::kStarDirect), "star_direct");
  EXPECT_STREQ(to_string(ConstructionMethod::kSearchFallback), "search_fallback");
}

}  // namespace
}  // namespace graceful
