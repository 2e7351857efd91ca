#include <gtest/gtest.h>

#include "qstrata/io.hpp"

using namespace qstrata;

TEST(Json, AlgebraRoundTrip) {
  const FDAlgebra b = build_borel_sl2(3);
  const json j = to_json(b);
  const FDAlgebra c = algebra_from_json(json::parse(j.dump()));
  ASSERT_EQ(c.dim(), b.dim());
  EXPECT_EQ(c.field_char(), b.field_char());
  EXPECT_EQ(c.unit(), b.unit());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t k = 0; k < b.dim(); ++k)
      EXPECT_EQ(c.multiply(b.basis_vector(i), b.basis_vector(k)), b.multiply(b.basis_vector(i), b.basis_vector(k)));
  EXPECT_EQ(to_json(c), j);
}

TEST(Json, MalformedAlgebraIsRejected) {
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 2, "p": 7})")), AlgebraError);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 1, "p": 8, "unit": [1], "sc": [[0,0,0,1]]})")), AlgebraError);
  // not associative: x*x = 1 but 1 is not a unit for x
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 2, "p": 7, "unit": [1,0], "sc": [[0,0,0,1],[1,1,0,1]]})")),
               AlgebraError);
}

TEST(Json, StratumFields) {
  auto g = make_weyl("A2");
  const auto w0 = longest_element(g);
  const auto p = make_stratum_pair(w0, w0, 5);
  const json j = to_json(stratum_invariants(p), p);
  EXPECT_EQ(j["blocks"], (json{{"base", 5}, {"exp", 2}}));
  EXPECT_EQ(j["rep_type"], "finite");
  EXPECT_EQ(j["frakS"], (json{1, 2}));
  const auto q = make_stratum_pair(from_word(g, {1, 2}), identity_element(g), 3);
  const json k = to_json(stratum_invariants(q), q);
  EXPECT_TRUE(k["blocks"].is_null());
  EXPECT_TRUE(k.contains("blocks_unavailable"));
}

TEST(Json, BorelInterval) {
  auto g = make_weyl("A3");
  const auto w = from_word(g, {1, 2, 1});
  const json j = to_json(borel_invariants(w, 5), w);
  EXPECT_TRUE(j["blocks"].is_null());
  EXPECT_EQ(j["blocks_interval"][0]["exp"], 0);
  EXPECT_EQ(j["blocks_interval"][1]["exp"], 1);
}
