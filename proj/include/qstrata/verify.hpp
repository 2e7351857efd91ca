#pragma once

// Verification suites shared by the command-line tool and the acceptance
// run. Each suite compares two independent computations over a whole group
// or a batch of random instances and records any disagreement.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "invariants.hpp"
#include "lattice.hpp"
#include "quiver.hpp"
#include "skewalg.hpp"
#include "strata.hpp"
#include "weyl.hpp"

namespace qstrata {

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;  ///< first few only
  std::size_t failure_count = 0;

  bool passed() const { return failure_count == 0; }
  void fail(std::string what) {
    if (failures.size() < 10) failures.push_back(std::move(what));
    ++failure_count;
  }
};

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Tensor product over F_p of the per-index fibre algebras of a stratum pair.
inline FDAlgebra fiber_tensor(const StratumPair& p, fp::Elem field) {
  const FiberClass fc = fiber_class(p);
  FDAlgebra z = ground_field(field);
  for (std::size_t i = 0; i < fc.kinds.size(); ++i)
    z = tensor(z, build_fiber_algebra(p.ell.ell, fc.b_zero[i], fc.c_zero[i], field));
  return z;
}

/// Central idempotents of the fibre tensor against ell^{card frakS}, for every pair.
inline SuiteResult fiber_block_suite(const WeylGroup& g, std::int64_t ell, std::size_t cap = default_table_cap()) {
  SuiteResult res{"fiber algebra blocks equal ell^card(frakS)"};
  const auto elems = ordered_elements(g, cap);
  std::int64_t dim = 1;
  for (std::size_t i = 0; i < g->cd.r; ++i) dim *= ell;
  const fp::Elem field = make_field_char(ell, dim);
  for (const auto& w1 : elems)
    for (const auto& w2 : elems) {
      const StratumPair p = make_stratum_pair(w1, w2, ell);
      const std::size_t idem = central_idempotents(fiber_tensor(p, field)).size();
      const std::size_t want = ipow(static_cast<std::size_t>(ell), block_count_function_algebra(p));
      ++res.checked;
      if (idem != want)
        res.fail(format_word(reduced_word(w1)) + " | " + format_word(reduced_word(w2)) + ": " + std::to_string(idem) +
                 " idempotents, expected " + std::to_string(want));
    }
  return res;
}

/// Random local monomial algebras with diagonal character actions of
/// (Z/ell)^k: idempotents of S * G against |D|, block sizes, and quiver
/// components against the cosets of Y.
inline SuiteResult skew_block_suite(std::uint64_t seed, std::size_t trials, std::int64_t ell = 3,
                                    std::size_t max_dim = 12, std::size_t max_k = 2) {
  SuiteResult res{"skew group algebra blocks equal |D|"};
  std::mt19937_64 rng(seed);
  const fp::Elem p = make_field_char(ell, static_cast<std::int64_t>(max_dim * ipow(static_cast<std::size_t>(ell), max_k)));
  for (std::size_t t = 0; t < trials; ++t) {
    const auto mon = random_monomial_algebra(rng, p, max_dim, t % 2 == 0);
    const std::size_t k = 1 + static_cast<std::size_t>(rng() % max_k);
    std::vector<IntVec> chars(mon.variables, IntVec(k));
    for (auto& c : chars)
      for (auto& x : c) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ell));
    const auto act = diagonal_character_action(mon, ell, chars);
    const BlockReport rep = blquiv_report(mon.algebra, act);
    const FDAlgebra prod = skew_product(mon.algebra, act);
    const auto idem = central_idempotents(prod);
    auto dims = block_dims(prod, idem);
    std::sort(dims.begin(), dims.end());
    ++res.checked;
    const std::string tag = "trial " + std::to_string(t) + " (dim " + std::to_string(mon.algebra.dim()) + ", k " +
                            std::to_string(k) + ")";
    if (idem.size() != rep.block_count)
      res.fail(tag + ": " + std::to_string(idem.size()) + " idempotents vs |D| = " + std::to_string(rep.block_count));
    if (dims != rep.block_dims) res.fail(tag + ": block dimensions differ");
    if (connected_components(rep.quiver) * rep.y_subgroup.size() != rep.quiver.vertices.size())
      res.fail(tag + ": quiver components differ from the index of Y");
  }
  return res;
}

/// The Borel sl2 instance: ell one-dimensional simples, one block, and a
/// single ell-cycle as basic-algebra quiver, by direct computation and by the
/// character route on F_p[E]/(E^ell) with K acting by zeta^2.
inline SuiteResult borel_sl2_suite(std::int64_t ell) {
  SuiteResult res{"Borel sl2: simples, block, cyclic quiver"};
  const auto l = static_cast<std::size_t>(ell);
  const FDAlgebra b = build_borel_sl2(ell);
  const auto sm = simple_modules(b);
  ++res.checked;
  if (sm.count != l || sm.dims != std::vector<std::size_t>(l, 1)) res.fail("simple modules are not ell copies of dim 1");
  ++res.checked;
  if (central_idempotents(b).size() != 1) res.fail("more than one block");
  ++res.checked;
  if (!is_directed_cycle(quiver_from_idempotents(b))) res.fail("direct quiver is not a single cycle");
  // character route
  const fp::Elem p = b.field_char();
  FDAlgebra s(l, p);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; i + j < l; ++j) s.add_term(i, j, i + j, 1);
  s.set_unit(s.basis_vector(0));
  const fp::Elem z2 = fp::pow(fp::root_of_unity(ell, p), 2, p);
  AbelianAction act;
  act.ell = ell;
  fp::Mat m(l, fp::Vec(l, 0));
  for (std::size_t i = 0; i < l; ++i) m[i][i] = fp::pow(z2, i, p);
  act.matrices.push_back(m);
  const auto rep = blquiv_report(s, act);
  ++res.checked;
  if (rep.block_count != 1 || !is_directed_cycle(adjacency(rep.quiver)))
    res.fail("character route does not give one block with a cyclic quiver");
  return res;
}

/// Lattice properties over every element and every pair of the group.
inline std::vector<SuiteResult> lattice_suite(const WeylGroup& g, std::int64_t ell, std::size_t cap = default_table_cap()) {
  SuiteResult aw{"A_w root-sequence span equals letter span"};
  SuiteResult distinct{"s(w) = len(w) iff some reduced word has distinct letters"};
  SuiteResult bw{"B^w contained in P^w with rank = absent letters"};
  SuiteResult count{"|Q^w / ell Q^w| = ell^(r - s(w))"};
  SuiteResult norm{"|Q_ell^w / N(w1,w2)| = ell^card(frakS)"};
  const auto elems = ordered_elements(g, cap);
  const std::size_t r = g->cd.r;
  for (const auto& w : elems) {
    const std::string name = format_word(reduced_word(w));
    const auto words = all_reduced_words(w);
    bool some_distinct = false;
    for (const auto& word : words) {
      ++aw.checked;
      try {
        a_w_lattice(g, word);
      } catch (const Error& e) {
        aw.fail(e.what());
      }
      some_distinct = some_distinct || letters(word).size() == word.size();
    }
    ++distinct.checked;
    if ((rank_s(w) == length(w)) != some_distinct) distinct.fail(name);
    ++bw.checked;
    try {
      const auto word = reduced_word(w);
      if (b_w_lattice(g, word).rank() != r - letters(word).size()) bw.fail(name + ": wrong rank");
    } catch (const Error& e) {
      bw.fail(e.what());
    }
    if (std::gcd(ell, order(w)) != 1) {
      ++count.skipped;
      continue;
    }
    ++count.checked;
    const std::size_t want = r - rank_s(w);
    const EllSubgroup image(fixed_lattice(w, BasisKind::Root), ell);
    const EllSubgroup fixed = fixed_points_mod_ell(w, BasisKind::Root, ell);
    if (static_cast<std::size_t>(image.order_exponent()) != want ||
        static_cast<std::size_t>(fixed.order_exponent()) != want || !image.is_subgroup_of(fixed))
      count.fail(name);
  }
  for (const auto& w1 : elems)
    for (const auto& w2 : elems) {
      const StratumPair p = make_stratum_pair(w1, w2, ell);
      if (std::gcd(ell, order(p.twist)) != 1) {
        ++norm.skipped;
        continue;
      }
      ++norm.checked;
      const auto inv = quotient_invariants(normalizer_lattice(ell, w1, w2),
                                           fixed_points_mod_ell(p.twist, BasisKind::Root, ell));
      bool ok = inv.size() == block_count_function_algebra(p);
      for (const auto& d : inv) ok = ok && d == ell;
      if (!ok) norm.fail(format_word(reduced_word(w1)) + " | " + format_word(reduced_word(w2)));
    }
  return {aw, distinct, bw, count, norm};
}

inline SuiteResult sweep_suite(const WeylGroup& g, std::int64_t ell, std::size_t cap = default_table_cap()) {
  const SweepReport rep = consistency_sweep(g, ell, cap);
  SuiteResult res{"consistency sweep"};
  for (const auto& p : rep.properties) {
    res.checked += p.checked;
    res.skipped += p.skipped;
    if (!p.passed) res.fail(p.name + ": " + p.counterexample);
  }
  return res;
}

}  // namespace qstrata
