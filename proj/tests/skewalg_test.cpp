#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qstrata/invariants.hpp"
#include "qstrata/skewalg.hpp"

using namespace qstrata;

namespace {

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

// F_p[X]/(X^n), basis X^0..X^{n-1}.
FDAlgebra truncated(std::size_t n, fp::Elem p) {
  FDAlgebra a(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) a.add_term(i, j, i + j, 1);
  a.set_unit(a.basis_vector(0));
  validate_algebra(a);
  return a;
}

// F_p[X,Y]/(X^2,XY,Y^2), basis 1, X, Y.
FDAlgebra square_zero2(fp::Elem p) {
  FDAlgebra a(3, p);
  for (std::size_t i = 0; i < 3; ++i) {
    a.add_term(0, i, i, 1);
    if (i) a.add_term(i, 0, i, 1);
  }
  a.set_unit(a.basis_vector(0));
  validate_algebra(a);
  return a;
}

// Mat_2, basis E11, E12, E21, E22.
FDAlgebra mat2(fp::Elem p) {
  FDAlgebra a(4, p);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) a.add_term(i * 2 + j, j * 2 + l, i * 2 + l, 1);
  fp::Vec u(4, 0);
  u[0] = u[3] = 1;
  a.set_unit(u);
  validate_algebra(a);
  return a;
}

// F_p[Z/n], basis g^0..g^{n-1}.
FDAlgebra cyclic_group_algebra(std::size_t n, fp::Elem p) {
  FDAlgebra a(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.add_term(i, j, (i + j) % n, 1);
  a.set_unit(a.basis_vector(0));
  validate_algebra(a);
  return a;
}

AbelianAction diagonal(std::int64_t ell, const std::vector<std::vector<fp::Elem>>& diag) {
  AbelianAction act;
  act.ell = ell;
  for (const auto& d : diag) {
    fp::Mat m(d.size(), fp::Vec(d.size(), 0));
    for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    act.matrices.push_back(std::move(m));
  }
  return act;
}

// Orthogonal, idempotent, summing to 1, and block dims summing to dim.
void expect_block_decomposition(const FDAlgebra& a, const fp::Mat& idem) {
  const fp::Elem p = a.field_char();
  fp::Vec sum(a.dim(), 0);
  for (std::size_t i = 0; i < idem.size(); ++i) {
    EXPECT_EQ(a.multiply(idem[i], idem[i]), idem[i]);
    for (std::size_t j = 0; j < idem.size(); ++j)
      if (i != j) {
        EXPECT_TRUE(fp::is_zero(a.multiply(idem[i], idem[j])));
      }
    for (std::size_t k = 0; k < a.dim(); ++k) sum[k] = fp::add(sum[k], idem[i][k], p);
  }
  EXPECT_EQ(sum, a.unit());
  std::size_t total = 0;
  for (auto d : block_dims(a, idem)) total += d;
  EXPECT_EQ(total, a.dim());
}

// Nilpotent elements of a small commutative algebra, by enumeration of F_p^n.
std::size_t count_nilpotents(const FDAlgebra& a) {
  const fp::Elem p = a.field_char();
  std::size_t total = 1, count = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    fp::Vec x(a.dim());
    std::size_t c = code;
    for (auto& v : x) {
      v = static_cast<fp::Elem>(c % p);
      c /= p;
    }
    if (fp::is_zero(a.power(x, a.dim()))) ++count;
  }
  return count;
}

}  // namespace

TEST(FieldChar, ExamplesAgreeWithSearch) {
  for (auto [ell, min_dim] : std::vector<std::pair<int, int>>{{3, 10}, {5, 10}, {3, 5}, {7, 49}, {3, 108}}) {
    std::uint64_t want = static_cast<std::uint64_t>(min_dim) + 1;
    while (!(naive_prime(want) && want % static_cast<std::uint64_t>(ell) == 1)) ++want;
    EXPECT_EQ(make_field_char(ell, min_dim), want);
  }
  EXPECT_EQ(make_field_char(3, 10), 13u);
  EXPECT_EQ(make_field_char(5, 10), 11u);
  EXPECT_EQ(make_field_char(3, 5), 7u);
}

TEST(FieldChar, RootOfUnityHasExactOrder) {
  for (std::int64_t ell : {3, 5, 7, 9}) {
    const auto p = make_field_char(ell, 50);
    const auto z = fp::root_of_unity(ell, p);
    fp::Elem x = 1;
    for (std::int64_t k = 1; k <= ell; ++k) {
      x = fp::mul(x, z, p);
      EXPECT_EQ(x == 1, k == ell);
    }
  }
  EXPECT_THROW(fp::root_of_unity(3, 11), FieldMismatch);
}

TEST(Algebra, RejectsNonAssociativeAndBadUnit) {
  // e1 e1 = e0 with unit e0 but e0 e1 = 0: unit axiom fails
  EXPECT_THROW(make_algebra(2, 7, {{0, 0, 0, 1}, {1, 1, 0, 1}}, {1, 0}), AlgebraError);
  // (e1 e1) e2 = e2 but e1 (e1 e2) = 0
  std::vector<std::array<std::int64_t, 4>> sc{{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {0, 2, 2, 1},
                                              {2, 0, 2, 1}, {1, 1, 0, 1}};
  EXPECT_THROW(make_algebra(3, 7, sc, {1, 0, 0}), AlgebraError);
  EXPECT_THROW(make_algebra(2, 8, {{0, 0, 0, 1}}, {1, 0}), AlgebraError);
  EXPECT_NO_THROW(make_algebra(2, 7, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 3}}, {1, 0}));
}

TEST(Radical, Examples) {
  EXPECT_TRUE(radical(mat2(7)).empty());
  const auto t3 = truncated(3, 7);
  const auto j = radical(t3);
  ASSERT_EQ(j.size(), 2u);
  for (const auto& v : j) EXPECT_EQ(v[0], 0u);
  const auto sq = square_zero2(7);
  ASSERT_EQ(radical(sq).size(), 2u);
  EXPECT_EQ(radical_power_dims(sq), (std::vector<std::size_t>{2, 0}));
  EXPECT_EQ(radical_power_dims(t3), (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_THROW(radical(truncated(3, 3)), AlgebraError);
}

TEST(Radical, MatchesNilpotentCountOnCommutativeAlgebras) {
  // in a commutative algebra the radical is the set of nilpotents
  const std::vector<FDAlgebra> algebras{truncated(3, 5), square_zero2(5), cyclic_group_algebra(3, 7),
                                        build_fiber_algebra(3, true, false, 7),
                                        build_fiber_algebra(3, true, true, 7)};
  for (const auto& a : algebras) {
    std::size_t expect = 1;
    for (std::size_t i = 0; i < radical(a).size(); ++i) expect *= a.field_char();
    EXPECT_EQ(count_nilpotents(a), expect);
  }
}

TEST(CentralIdempotents, Examples) {
  EXPECT_EQ(central_idempotents(truncated(3, 7)).size(), 1u);
  EXPECT_EQ(central_idempotents(tensor(cyclic_group_algebra(1, 7), cyclic_group_algebra(1, 7))).size(), 1u);
  // F_p x F_p
  const auto prod = make_algebra(2, 7, {{0, 0, 0, 1}, {1, 1, 1, 1}}, {1, 1});
  const auto pi = central_idempotents(prod);
  EXPECT_EQ(pi.size(), 2u);
  expect_block_decomposition(prod, pi);
  // F_p[Z/3]: e_chi = 1/3 sum chi(g^{-1}) g
  const fp::Elem p = 7;
  const auto g3 = cyclic_group_algebra(3, p);
  const auto idem = central_idempotents(g3);
  ASSERT_EQ(idem.size(), 3u);
  const fp::Elem z = fp::root_of_unity(3, p), third = fp::inv(3, p);
  fp::Mat expect;
  for (std::uint64_t c = 0; c < 3; ++c) {
    fp::Vec e(3);
    for (std::uint64_t g = 0; g < 3; ++g) e[g] = fp::mul(third, fp::pow(z, (3 - c * g % 3) % 3, p), p);
    expect.push_back(e);
  }
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(idem, expect);
  expect_block_decomposition(g3, idem);
  EXPECT_EQ(central_idempotents(mat2(7)).size(), 1u);
}

TEST(Fiber, VanishingPatterns) {
  const auto ss = build_fiber_algebra(3, false, false);
  EXPECT_EQ(central_idempotents(ss).size(), 3u);
  EXPECT_TRUE(radical(ss).empty());
  const auto tr = build_fiber_algebra(3, true, false);
  EXPECT_EQ(radical_power_dims(tr), (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(central_idempotents(tr).size(), 1u);
  EXPECT_EQ(radical_power_dims(build_fiber_algebra(3, false, true)), (std::vector<std::size_t>{2, 1, 0}));
  const auto loc = build_fiber_algebra(3, true, true);
  EXPECT_EQ(radical_power_dims(loc), (std::vector<std::size_t>{2, 0}));
  for (std::int64_t ell : {3, 5, 7}) {
    const auto p = make_field_char(ell, ell);
    EXPECT_EQ(central_idempotents(build_fiber_algebra(ell, false, false, p)).size(), static_cast<std::size_t>(ell));
    EXPECT_EQ(radical_power_dims(build_fiber_algebra(ell, true, true, p)),
              (std::vector<std::size_t>{static_cast<std::size_t>(ell - 1), 0}));
    // exactly one vanishing: truncated polynomial ring, radical powers drop by one
    std::vector<std::size_t> chain;
    for (std::int64_t k = ell - 1; k >= 0; --k) chain.push_back(static_cast<std::size_t>(k));
    EXPECT_EQ(radical_power_dims(build_fiber_algebra(ell, true, false, p)), chain);
  }
}

TEST(Tensor, BlocksMultiply) {
  const fp::Elem p = 7;
  const auto ss = build_fiber_algebra(3, false, false, p), tr = build_fiber_algebra(3, true, false, p);
  const auto a = tensor(ss, tr);
  EXPECT_EQ(a.dim(), 9u);
  EXPECT_NO_THROW(validate_algebra(a));
  EXPECT_EQ(central_idempotents(a).size(), 3u);
  EXPECT_EQ(central_idempotents(tensor(ss, ss)).size(), 9u);
  const auto same = tensor(tr, ground_field(p));
  EXPECT_EQ(same.dim(), tr.dim());
  for (std::size_t i = 0; i < tr.dim(); ++i)
    for (std::size_t j = 0; j < tr.dim(); ++j) EXPECT_EQ(same.basis_product(i, j), tr.basis_product(i, j));
  EXPECT_THROW(tensor(ss, ground_field(13)), FieldMismatch);
}

TEST(Fiber, TensorBlocksMatchClosedFormOnA2) {
  // every stratum pair of A2 at ell = 3
  auto g = make_weyl("A2");
  const auto p = make_field_char(3, 27);
  for (const auto& w1 : enumerate_group(g))
    for (const auto& w2 : enumerate_group(g)) {
      const auto sp = make_stratum_pair(w1, w2, 3);
      const auto fc = fiber_class(sp);
      FDAlgebra z = ground_field(p);
      for (std::size_t i = 0; i < fc.kinds.size(); ++i)
        z = tensor(z, build_fiber_algebra(3, fc.b_zero[i], fc.c_zero[i], p));
      std::size_t expect = 1;
      for (std::size_t k = 0; k < block_count_function_algebra(sp); ++k) expect *= 3;
      EXPECT_EQ(central_idempotents(z).size(), expect) << w1 << " " << w2;
    }
}

TEST(BorelSl2, SimplesBlocksAndQuiver) {
  const auto b3 = build_borel_sl2(3);
  EXPECT_EQ(b3.dim(), 9u);
  EXPECT_EQ(radical(b3).size(), 6u);
  const auto sm = simple_modules(b3);
  EXPECT_EQ(sm.count, 3u);
  EXPECT_EQ(sm.dims, (std::vector<std::size_t>{1, 1, 1}));
  const auto idem = central_idempotents(b3);
  EXPECT_EQ(idem.size(), 1u);
  expect_block_decomposition(b3, idem);
  EXPECT_TRUE(is_directed_cycle(quiver_from_idempotents(b3)));

  const auto b5 = build_borel_sl2(5);
  EXPECT_EQ(b5.dim(), 25u);
  EXPECT_EQ(simple_modules(b5).count, 5u);
  EXPECT_EQ(central_idempotents(b5).size(), 1u);
  EXPECT_TRUE(is_directed_cycle(quiver_from_idempotents(b5)));
}

TEST(BorelSl2, QuiverAgreesWithCharacterRoute) {
  // B = F_p[E]/(E^ell) * Z/ell with K E K^{-1} = zeta^2 E
  for (std::int64_t ell : {3, 5}) {
    const auto p = make_field_char(ell, ell * ell);
    const auto s = truncated(static_cast<std::size_t>(ell), p);
    const fp::Elem z2 = fp::pow(fp::root_of_unity(ell, p), 2, p);
    std::vector<fp::Elem> d;
    for (std::int64_t k = 0; k < ell; ++k) d.push_back(fp::pow(z2, static_cast<std::uint64_t>(k), p));
    const auto rep = blquiv_report(s, diagonal(ell, {d}));
    EXPECT_EQ(rep.block_count, 1u);
    EXPECT_EQ(rep.quiver.vertices.size(), static_cast<std::size_t>(ell));
    EXPECT_TRUE(is_directed_cycle(adjacency(rep.quiver)));
    EXPECT_EQ(central_idempotents(skew_product(s, diagonal(ell, {d}))).size(), 1u);
  }
}

TEST(SkewProduct, Examples) {
  const std::int64_t ell = 3;
  const auto p = make_field_char(ell, 40);
  const fp::Elem z = fp::root_of_unity(ell, p);
  // trivial action: ordinary group ring, blocks multiply
  const auto t = truncated(3, p);
  const auto triv = skew_product(t, diagonal(ell, {{1, 1, 1}}));
  EXPECT_EQ(triv.dim(), 9u);
  EXPECT_EQ(central_idempotents(triv).size(), 3u);
  // X -> zeta X: one block
  const auto tw = skew_product(t, diagonal(ell, {{1, z, fp::mul(z, z, p)}}));
  const auto idem = central_idempotents(tw);
  EXPECT_EQ(idem.size(), 1u);
  expect_block_decomposition(tw, idem);
  // Mat_2 with inner action by diag(zeta, 1): same block count as the trivial action
  const auto m = mat2(p);
  const auto inner = diagonal(ell, {{1, z, fp::inv(z, p), 1}});
  const auto mi = skew_product(m, inner), mt = skew_product(m, diagonal(ell, {{1, 1, 1, 1}}));
  EXPECT_EQ(central_idempotents(mi).size(), 3u);
  EXPECT_EQ(central_idempotents(mt).size(), 3u);
  expect_block_decomposition(mi, central_idempotents(mi));
}

TEST(SkewProduct, ContainsFactorsAsSubalgebras) {
  const auto p = make_field_char(3, 40);
  const fp::Elem z = fp::root_of_unity(3, p);
  const auto s = square_zero2(p);
  const auto act = diagonal(3, {{1, z, 1}, {1, 1, z}});
  const auto t = skew_product(s, act);
  const std::size_t order = 9;
  ASSERT_EQ(t.dim(), s.dim() * order);
  auto embed_s = [&](const fp::Vec& x) {
    fp::Vec v(t.dim(), 0);
    for (std::size_t a = 0; a < s.dim(); ++a) v[a * order] = x[a];
    return v;
  };
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      EXPECT_EQ(t.multiply(embed_s(s.basis_vector(i)), embed_s(s.basis_vector(j))),
                embed_s(s.basis_product(i, j)));
  // group elements multiply as in (Z/3)^2 and g s g^{-1} = tau_g(s)
  auto group = [&](std::size_t gi) {
    fp::Vec v(t.dim(), 0);
    v[gi] = 1;
    return v;
  };
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h) {
      const std::size_t sum = ((g / 3 + h / 3) % 3) * 3 + (g % 3 + h % 3) % 3;
      EXPECT_EQ(t.multiply(group(g), group(h)), group(sum));
    }
  const auto x = embed_s(s.basis_vector(1));
  const auto gx = t.multiply(group(3), x);  // generator (1,0) scales X by zeta
  fp::Vec expect(t.dim(), 0);
  expect[1 * order + 3] = z;
  EXPECT_EQ(gx, expect);
}

TEST(SkewProduct, RejectsBadActions) {
  const fp::Elem p = 7;
  const auto t = truncated(3, p);
  const fp::Elem z = fp::root_of_unity(3, p);
  // X -> zeta X but X^2 -> X^2 is not multiplicative
  EXPECT_THROW(skew_product(t, diagonal(3, {{1, z, 1}})), AlgebraError);
  // order 2 element with ell = 3
  EXPECT_THROW(skew_product(t, diagonal(3, {{1, p - 1, 1}})), AlgebraError);
}

TEST(BlockReport, Examples) {
  const std::int64_t ell = 3;
  const auto p = make_field_char(ell, 30);
  const fp::Elem z = fp::root_of_unity(ell, p);
  // trivial action: |G| blocks, loops only
  const auto t = truncated(3, p);
  const auto triv = blquiv_report(t, diagonal(ell, {{1, 1, 1}}));
  EXPECT_EQ(triv.block_count, 3u);
  EXPECT_EQ(connected_components(triv.quiver), 3u);
  for (const auto& e : triv.quiver.edges) EXPECT_EQ(e.from, e.to);
  std::size_t dims = 0;
  for (auto d : triv.block_dims) dims += d;
  EXPECT_EQ(dims, 9u);
  // faithful character: one block, a 3-cycle, m = 1
  const auto f = blquiv_report(t, diagonal(ell, {{1, z, fp::mul(z, z, p)}}));
  EXPECT_EQ(f.block_count, 1u);
  EXPECT_TRUE(is_directed_cycle(adjacency(f.quiver)));
  ASSERT_EQ(f.char_multiplicities.size(), 1u);
  EXPECT_EQ(f.char_multiplicities.begin()->second, 1u);
  // square-zero in two variables with independent characters
  const auto sq = blquiv_report(square_zero2(p), diagonal(ell, {{1, z, 1}, {1, 1, z}}));
  EXPECT_EQ(sq.block_count, 1u);
  EXPECT_EQ(sq.quiver.vertices.size(), 9u);
  EXPECT_EQ(sq.quiver.generators.size(), 2u);
  EXPECT_EQ(sq.quiver.arrow_count(), 18u);
  EXPECT_EQ(connected_components(sq.quiver), 1u);
  EXPECT_THROW(blquiv_report(mat2(p), diagonal(ell, {{1, 1, 1, 1}})), NotLocal);
}

TEST(BlockReport, RandomInstancesAgreeWithSkewProductBlocks) {
  std::mt19937_64 rng(20240611);
  const std::int64_t ell = 3;
  const auto p = make_field_char(ell, 12 * 9);
  std::size_t trials = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const bool commutative = trial % 2 == 0;
    const auto mon = random_monomial_algebra(rng, p, 12, commutative);
    const std::size_t k = 1 + static_cast<std::size_t>(rng() % 2);
    std::vector<IntVec> chars(mon.variables, IntVec(k));
    for (auto& c : chars)
      for (auto& x : c) x = static_cast<std::int64_t>(rng() % 3);
    const auto act = diagonal_character_action(mon, ell, chars);
    const auto rep = blquiv_report(mon.algebra, act);
    const auto t = skew_product(mon.algebra, act);
    const auto idem = central_idempotents(t);
    EXPECT_EQ(idem.size(), rep.block_count) << "trial " << trial;
    // block sizes agree too
    auto bd = block_dims(t, idem);
    std::sort(bd.begin(), bd.end());
    EXPECT_EQ(bd, rep.block_dims) << "trial " << trial;
    // components of the quiver are the cosets of Y
    EXPECT_EQ(connected_components(rep.quiver) * rep.y_subgroup.size(), rep.quiver.vertices.size());
    EXPECT_EQ(rep.block_count * rep.y_subgroup.size(), rep.quiver.vertices.size());
    ++trials;
  }
  EXPECT_GE(trials, 50u);
}

TEST(QuiverFromIdempotents, MatchesCharacterQuiverOnSmallSkewProducts) {
  // the basic algebra S * G has vertices indexed by characters; compare arrow
  // multiset sizes with the character route
  const std::int64_t ell = 3;
  const auto p = make_field_char(ell, 40);
  const fp::Elem z = fp::root_of_unity(ell, p);
  const auto s = square_zero2(p);
  for (const auto& diag : std::vector<std::vector<fp::Elem>>{{1, z, z}, {1, z, fp::mul(z, z, p)}, {1, 1, z}}) {
    const auto act = diagonal(ell, {diag});
    const auto rep = blquiv_report(s, act);
    const auto adj = quiver_from_idempotents(skew_product(s, act));
    std::size_t arrows = 0;
    std::multiset<std::size_t> outdeg, expect_out;
    for (const auto& row : adj) {
      std::size_t o = 0;
      for (auto m : row) o += m;
      arrows += o;
      outdeg.insert(o);
    }
    for (auto d : degrees(rep.quiver).first) expect_out.insert(d);
    EXPECT_EQ(arrows, rep.quiver.arrow_count());
    EXPECT_EQ(outdeg, expect_out);
  }
}
