#include <gtest/gtest.h>

#include <numeric>

#include "qstrata/rootsys.hpp"

using namespace qstrata;

TEST(CartanData, A2) {
  const auto cd = cartan_data("A2");
  EXPECT_EQ(cd.N, 3u);
  EXPECT_EQ(cd.r, 2u);
  EXPECT_EQ(cd.h, 3);
  EXPECT_EQ(cd.d, (IntVec{1, 1}));
  EXPECT_EQ(cd.theta_coeffs, (IntVec{1, 1}));
}

TEST(CartanData, A1) {
  const auto cd = cartan_data("a1");
  EXPECT_EQ(cd.N, 1u);
  EXPECT_EQ(cd.r, 1u);
  EXPECT_EQ(cd.h, 2);
  EXPECT_EQ(cd.d, (IntVec{1}));
}

TEST(CartanData, G2ShortFirst) {
  const auto cd = cartan_data("G2");
  EXPECT_EQ(cd.N, 6u);
  EXPECT_EQ(cd.h, 6);
  EXPECT_EQ(cd.d, (IntVec{1, 3}));
  EXPECT_EQ(cd.theta_coeffs, (IntVec{3, 2}));
}

TEST(CartanData, HighestRootsOfExceptionalTypes) {
  EXPECT_EQ(cartan_data("F4").theta_coeffs, (IntVec{2, 3, 4, 2}));
  EXPECT_EQ(cartan_data("E6").theta_coeffs, (IntVec{1, 2, 2, 3, 2, 1}));
  EXPECT_EQ(cartan_data("E8").theta_coeffs, (IntVec{2, 3, 4, 6, 5, 4, 3, 2}));
  EXPECT_EQ(cartan_data("E8").N, 120u);
  EXPECT_EQ(cartan_data("E7").N, 63u);
  EXPECT_EQ(cartan_data("E6").N, 36u);
  EXPECT_EQ(cartan_data("F4").N, 24u);
}

TEST(CartanData, ClosedFormRootCounts) {
  for (int r = 1; r <= 8; ++r) EXPECT_EQ(cartan_data(CartanType{'A', r}).N, static_cast<std::size_t>(r * (r + 1) / 2));
  for (int r = 2; r <= 8; ++r) EXPECT_EQ(cartan_data(CartanType{'B', r}).N, static_cast<std::size_t>(r * r));
  for (int r = 3; r <= 8; ++r) EXPECT_EQ(cartan_data(CartanType{'C', r}).N, static_cast<std::size_t>(r * r));
  for (int r = 4; r <= 8; ++r) EXPECT_EQ(cartan_data(CartanType{'D', r}).N, static_cast<std::size_t>(r * (r - 1)));
}

TEST(CartanData, SymmetrizableWithCoprimeSymmetrizers) {
  for (const auto& t : all_types_up_to_rank(8)) {
    const auto cd = cartan_data(t);
    for (std::size_t i = 0; i < cd.r; ++i)
      for (std::size_t j = 0; j < cd.r; ++j)
        EXPECT_EQ(cd.d[i] * cd.a(i, j), cd.d[j] * cd.a(j, i)) << t.label();
    EXPECT_EQ(gcd_all(cd.d), 1) << t.label();
    for (auto x : cd.d) EXPECT_GT(x, 0);
  }
}

TEST(CartanData, LowRankAliasing) {
  EXPECT_EQ(cartan_data("B1").cartan_type, (CartanType{'A', 1}));
  EXPECT_EQ(cartan_data("C1").cartan_type, (CartanType{'A', 1}));
  EXPECT_EQ(cartan_data("C2").cartan_type, (CartanType{'B', 2}));
  EXPECT_EQ(cartan_data("c3").cartan_type, (CartanType{'C', 3}));
}

TEST(CartanData, InvalidTypes) {
  EXPECT_THROW(cartan_data("D3"), InvalidCartanType);
  EXPECT_THROW(cartan_data("E9"), InvalidCartanType);
  EXPECT_THROW(cartan_data("F3"), InvalidCartanType);
  EXPECT_THROW(cartan_data("G3"), InvalidCartanType);
  EXPECT_THROW(cartan_data("A0"), InvalidCartanType);
  EXPECT_THROW(cartan_data("X2"), InvalidCartanType);
  EXPECT_THROW(parse_cartan_type("A"), ParseError);
  EXPECT_THROW(parse_cartan_type("3A"), ParseError);
  EXPECT_THROW(parse_cartan_type("A3x"), ParseError);
}

TEST(GoodEll, Examples) {
  EXPECT_TRUE(is_good_ell(cartan_data("A2"), 5).validated);
  EXPECT_FALSE(is_good_ell(cartan_data("A2"), 4).validated);
  EXPECT_FALSE(is_good_ell(cartan_data("G2"), 3).validated);
  EXPECT_TRUE(is_good_ell(cartan_data("G2"), 5).validated);
  EXPECT_FALSE(is_good_ell(cartan_data("E8"), 5).validated);  // theta has coefficient 5
  EXPECT_TRUE(is_good_ell(cartan_data("E8"), 7).validated);
  EXPECT_TRUE(is_good_ell(cartan_data("A3"), 9).validated);   // non-prime but good
}

TEST(PairingMatrix, Examples) {
  EXPECT_EQ(pairing_matrix_mod_ell(cartan_data("A2"), 5), IntMatrix::from_rows({{1, 0}, {0, 1}}));
  EXPECT_EQ(pairing_matrix_mod_ell(cartan_data("B2"), 5), IntMatrix::from_rows({{2, 0}, {0, 1}}));
  EXPECT_EQ(pairing_matrix_mod_ell(cartan_data("A1"), 3), IntMatrix::from_rows({{1}}));
  EXPECT_THROW(pairing_matrix_mod_ell(cartan_data("A2"), 4), BadEll);
}

TEST(PairingMatrix, DeterminantIsAUnitForGoodEll) {
  for (const auto& t : all_types_up_to_rank(8)) {
    const auto cd = cartan_data(t);
    for (std::int64_t ell = 3; ell <= 31; ell += 2) {
      if (!is_good_ell(cd, ell).validated) continue;
      const auto m = pairing_matrix_mod_ell(cd, ell);
      std::int64_t det = 1;
      for (std::size_t i = 0; i < cd.r; ++i) det = det * m(i, i) % ell;
      EXPECT_EQ(std::gcd(det, ell), 1) << t.label() << " ell=" << ell;
    }
  }
}
