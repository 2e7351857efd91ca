#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "qstrata/weyl.hpp"

using namespace qstrata;

namespace {

// Reflection length by breadth-first search over the Cayley graph of W with
// respect to ALL reflections (conjugates of simple reflections).
std::unordered_map<IntMatrix, std::size_t> reflection_length_bfs(const WeylGroup& g) {
  const auto elems = enumerate_group(g);
  std::unordered_set<IntMatrix> refl_set;
  std::vector<WeylElement> refls;
  for (const auto& w : elems)
    for (int i = 1; i <= static_cast<int>(g->cd.r); ++i) {
      WeylElement t = w * simple_reflection(g, i) * w.inverse();
      if (refl_set.insert(t.matrix()).second) refls.push_back(t);
    }
  EXPECT_EQ(refls.size(), g->cd.N);
  std::unordered_map<IntMatrix, std::size_t> dist;
  std::vector<WeylElement> frontier{identity_element(g)};
  dist[frontier.front().matrix()] = 0;
  for (std::size_t d = 1; !frontier.empty(); ++d) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (const auto& t : refls) {
        WeylElement x = w * t;
        if (dist.emplace(x.matrix(), d).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  return dist;
}

const char* kSmallTypes[] = {"A1", "A2", "A3", "B2", "B3", "C3", "G2"};

}  // namespace

TEST(FromWord, Basics) {
  auto g = make_weyl("A2");
  EXPECT_TRUE(from_word(g, {}).is_identity());
  EXPECT_EQ(from_word(g, {1, 2, 1}), from_word(g, {2, 1, 2}));
  EXPECT_TRUE(from_word(make_weyl("A1"), {1, 1}).is_identity());
  EXPECT_THROW(from_word(g, {3}), IndexOutOfRange);
  EXPECT_THROW(from_word(g, {0}), IndexOutOfRange);
}

TEST(FromWord, CoxeterRelationsUpToRank4) {
  for (const auto& t : all_types_up_to_rank(4)) {
    auto g = make_weyl(cartan_data(t));
    const int r = t.rank;
    for (int i = 1; i <= r; ++i) {
      EXPECT_TRUE(from_word(g, {i, i}).is_identity());
      for (int j = i + 1; j <= r; ++j) {
        // m_ij from a_ij a_ji: 0->2, 1->3, 2->4, 3->6
        const auto p = g->cd.a(i - 1, j - 1) * g->cd.a(j - 1, i - 1);
        const int m = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : 6;
        WeylWord a, b;
        for (int k = 0; k < m; ++k) {
          a.push_back(k % 2 ? j : i);
          b.push_back(k % 2 ? i : j);
        }
        EXPECT_EQ(from_word(g, a), from_word(g, b)) << t.label() << " " << i << "," << j;
        EXPECT_EQ(order(simple_reflection(g, i) * simple_reflection(g, j)), m);
      }
    }
  }
}

TEST(Length, Examples) {
  auto g = make_weyl("A3");
  EXPECT_EQ(length(identity_element(g)), 0u);
  EXPECT_EQ(length(longest_element(g)), 6u);
  EXPECT_EQ(length(from_word(make_weyl("A2"), {1, 2, 1})), 3u);
}

TEST(ReducedWord, Examples) {
  auto g = make_weyl("A2");
  EXPECT_TRUE(reduced_word(identity_element(g)).empty());
  EXPECT_EQ(reduced_word(longest_element(g)), (WeylWord{1, 2, 1}));
}

TEST(LongestElement, Examples) {
  auto a1 = make_weyl("A1");
  EXPECT_EQ(longest_element(a1), simple_reflection(a1, 1));
  auto a2 = make_weyl("A2");
  EXPECT_EQ(longest_element(a2).matrix(), IntMatrix::from_rows({{0, -1}, {-1, 0}}));
  auto b2 = make_weyl("B2");
  EXPECT_EQ(longest_element(b2).matrix(), IntMatrix::from_rows({{-1, 0}, {0, -1}}));
}

TEST(LongestElement, LengthIsNAndInvolutionUpToRank4) {
  for (const auto& t : all_types_up_to_rank(4)) {
    auto g = make_weyl(cartan_data(t));
    const auto w0 = longest_element(g);
    EXPECT_EQ(length(w0), g->cd.N) << t.label();
    EXPECT_TRUE((w0 * w0).is_identity()) << t.label();
  }
}

TEST(CoxeterNumber, MatchesOrderOfCoxeterElement) {
  for (const auto& t : all_types_up_to_rank(8)) {
    auto g = make_weyl(cartan_data(t));
    WeylWord all;
    for (int i = 1; i <= t.rank; ++i) all.push_back(i);
    EXPECT_EQ(order(from_word(g, all)), g->cd.h) << t.label();
  }
}

TEST(RankS, Examples) {
  auto a2 = make_weyl("A2");
  EXPECT_EQ(rank_s(identity_element(a2)), 0u);
  EXPECT_EQ(rank_s(longest_element(a2)), 1u);
  EXPECT_EQ(rank_s(longest_element(make_weyl("B2"))), 2u);
}

TEST(RankS, EqualsReflectionLengthBruteForce) {
  for (const char* type : kSmallTypes) {
    auto g = make_weyl(type);
    const auto dist = reflection_length_bfs(g);
    for (const auto& w : enumerate_group(g)) EXPECT_EQ(rank_s(w), dist.at(w.matrix())) << type;
  }
}

TEST(Weyl, ExhaustiveLengthAndRankProperties) {
  for (const char* type : kSmallTypes) {
    auto g = make_weyl(type);
    for (const auto& w : enumerate_group(g)) {
      const auto word = reduced_word(w);
      EXPECT_EQ(from_word(g, word), w);
      EXPECT_EQ(length(w), word.size());
      EXPECT_EQ(length(w.inverse()), length(w));
      EXPECT_TRUE((w * w.inverse()).is_identity());
      EXPECT_EQ(rank_s(w), rank_s(w.inverse()));
      EXPECT_LE(rank_s(w), length(w));
      EXPECT_EQ(rank_s(w) % 2, length(w) % 2);
    }
  }
}

TEST(Weyl, DistinctLetterCriterionAndLetterSets) {
  for (const char* type : kSmallTypes) {
    auto g = make_weyl(type);
    for (const auto& w : enumerate_group(g)) {
      const auto words = all_reduced_words(w);
      ASSERT_FALSE(words.empty());
      bool has_distinct = false;
      const auto first_letters = letters(words.front());
      for (const auto& word : words) {
        EXPECT_EQ(from_word(g, word), w);
        EXPECT_EQ(letters(word), first_letters) << type;
        has_distinct = has_distinct || letters(word).size() == word.size();
      }
      EXPECT_EQ(rank_s(w) == length(w), has_distinct) << type << " " << format_word(words.front());
    }
  }
}

TEST(BruhatLeq, Examples) {
  auto g = make_weyl("A2");
  const auto e = identity_element(g);
  const auto w0 = longest_element(g);
  for (const auto& w : enumerate_group(g)) {
    EXPECT_TRUE(bruhat_leq(e, w));
    if (!(w == w0)) {
      EXPECT_FALSE(bruhat_leq(w0, w));
    }
  }
  EXPECT_TRUE(bruhat_leq(from_word(g, {1}), from_word(g, {1, 2})));
  EXPECT_FALSE(bruhat_leq(from_word(g, {1}), from_word(g, {2})));
}

TEST(BruhatLeq, MatchesSubwordCriterionAndIsPartialOrder) {
  for (const char* type : {"A2", "A3", "B2", "B3", "G2"}) {
    auto g = make_weyl(type);
    const auto elems = enumerate_group(g);
    // subword oracle: all subwords of one reduced word of w
    for (const auto& w : elems) {
      const auto word = reduced_word(w);
      std::unordered_set<IntMatrix> below;
      for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()); ++mask) {
        WeylWord sub;
        for (std::size_t k = 0; k < word.size(); ++k)
          if (mask >> k & 1) sub.push_back(word[k]);
        below.insert(from_word(g, sub).matrix());
      }
      for (const auto& u : elems) {
        const bool leq = bruhat_leq(u, w);
        EXPECT_EQ(leq, below.count(u.matrix()) > 0) << type;
        if (leq) {
          EXPECT_LE(length(u), length(w));
        }
        if (leq && bruhat_leq(w, u)) {
          EXPECT_EQ(u, w);
        }
      }
    }
  }
}

TEST(Order, Examples) {
  auto g = make_weyl("A2");
  EXPECT_EQ(order(identity_element(g)), 1);
  EXPECT_EQ(order(simple_reflection(g, 1)), 2);
  EXPECT_EQ(order(from_word(g, {1, 2})), 3);
}

TEST(StabilizesWeight, Examples) {
  auto a3 = make_weyl("A3");
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(stabilizes_weight(identity_element(a3), i));
  EXPECT_TRUE(stabilizes_weight(from_word(a3, {1, 2, 1}), 3));
  EXPECT_FALSE(stabilizes_weight(simple_reflection(make_weyl("A2"), 1), 1));
  EXPECT_THROW(stabilizes_weight(identity_element(a3), 4), IndexOutOfRange);
}

TEST(RootSequence, Examples) {
  auto g = make_weyl("A2");
  EXPECT_TRUE(root_sequence(g, {}).betas.empty());
  EXPECT_EQ(root_sequence(g, {1, 2}).betas, (std::vector<IntVec>{{1, 0}, {1, 1}}));
  EXPECT_EQ(root_sequence(g, {1, 2, 1}).betas, (std::vector<IntVec>{{1, 0}, {1, 1}, {0, 1}}));
  EXPECT_THROW(root_sequence(g, {1, 1}), NotReduced);
}

TEST(RootSequence, DistinctPositiveRootsForEveryReducedWord) {
  for (const char* type : kSmallTypes) {
    auto g = make_weyl(type);
    for (const auto& w : enumerate_group(g)) {
      const auto seq = root_sequence(g, reduced_word(w));
      std::set<IntVec> seen;
      for (const auto& b : seq.betas) {
        EXPECT_TRUE(std::all_of(b.begin(), b.end(), [](auto x) { return x >= 0; }));
        EXPECT_TRUE(g->cd.is_root(b));
        EXPECT_TRUE(seen.insert(b).second);
      }
    }
  }
}

TEST(EnumerateGroup, Orders) {
  EXPECT_EQ(enumerate_group(make_weyl("A1")).size(), 2u);
  EXPECT_EQ(enumerate_group(make_weyl("A3")).size(), 24u);
  EXPECT_EQ(enumerate_group(make_weyl("B3")).size(), 48u);
  EXPECT_EQ(enumerate_group(make_weyl("G2")).size(), 12u);
  EXPECT_EQ(enumerate_group(make_weyl("F4")).size(), 1152u);
  EXPECT_THROW(enumerate_group(make_weyl("A3"), 10), CapExceeded);
}

TEST(Weyl, RootPermutation) {
  auto g = make_weyl("B3");
  for (const auto& w : enumerate_group(g))
    for (const auto& beta : g->cd.pos_roots) EXPECT_TRUE(g->cd.is_root(w.act_on_root(beta)));
}

TEST(Weyl, MinusW0FixedPointFreeExactlyForEvenA) {
  for (const auto& t : all_types_up_to_rank(6)) {
    auto g = make_weyl(cartan_data(t));
    const auto w0 = longest_element(g);
    bool fixed_point_free = true;
    for (int i = 1; i <= t.rank; ++i) {
      IntVec e(static_cast<std::size_t>(t.rank), 0);
      e[static_cast<std::size_t>(i - 1)] = 1;
      IntVec img = w0.act_on_root(e);
      for (auto& x : img) x = -x;
      if (img == e) fixed_point_free = false;
    }
    const bool even_a = t.family == 'A' && t.rank % 2 == 0;
    EXPECT_EQ(fixed_point_free, even_a) << t.label();
  }
}

TEST(WordSyntax, ParseAndRoundTrip) {
  auto g = make_weyl("A3");
  const auto w0 = longest_element(g);
  EXPECT_EQ(parse_word_expr(g, "w0"), w0);
  EXPECT_TRUE(parse_word_expr(g, "").is_identity());
  EXPECT_TRUE(parse_word_expr(g, "e").is_identity());
  EXPECT_EQ(parse_word_expr(g, "1,2,1"), from_word(g, {1, 2, 1}));
  EXPECT_EQ(parse_word_expr(g, "w0*1,2"), w0 * from_word(g, {1, 2}));
  EXPECT_EQ(parse_word_expr(g, " w0 * 1 "), w0 * simple_reflection(g, 1));
  for (const auto& w : enumerate_group(g)) EXPECT_EQ(parse_word_expr(g, format_word(reduced_word(w))), w);
}

TEST(WordSyntax, ErrorsCarryPositions) {
  auto g = make_weyl("A3");
  try {
    parse_word_expr(g, "1,5");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_word_expr(g, "1,"), ParseError);
  EXPECT_THROW(parse_word_expr(g, "w0*"), ParseError);
  EXPECT_THROW(parse_word_expr(g, "x"), ParseError);
  EXPECT_THROW(parse_word_expr(g, "w0 1"), ParseError);
}
