#pragma once

// Closed-form invariants of the reduced quantised function algebra at a point
// of the double Bruhat cell X_{w1,w2}, and of the reduced Borel algebra at a
// point of X_{w,e}. Counts are returned as exponents of ell; ell_power()
// renders them exactly for display.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"

namespace qstrata {

enum class RepType { Finite, Wild };

inline const char* rep_type_name(RepType t) { return t == RepType::Finite ? "finite" : "wild"; }

/// ell^exp as a decimal string.
inline std::string ell_power(std::int64_t ell, std::size_t exp) {
  BigInt p = 1;
  for (std::size_t k = 0; k < exp; ++k) p *= ell;
  return p.str();
}

struct StratumPair {
  WeylElement w1, w2;
  WeylElement twist;  ///< w2^{-1} w1
  GoodEll ell;
};

inline StratumPair make_stratum_pair(const WeylElement& w1, const WeylElement& w2, std::int64_t ell) {
  if (!(w1.cartan().cartan_type == w2.cartan().cartan_type))
    throw Error("w1 and w2 belong to different Weyl groups");
  require_good_ell(w1.cartan(), ell);
  return StratumPair{w1, w2, w2.inverse() * w1, GoodEll{ell, true}};
}

/// The other twist convention, w2 w1^{-1}. It is w1 (w2^{-1} w1)^{-1} w1^{-1},
/// so s, order and fixed-lattice ranks agree; only the lattices differ.
inline WeylElement alternate_twist(const StratumPair& p) { return p.w2 * p.w1.inverse(); }

enum class FiberKind { Semisimple, Truncated, LocalSingular };

inline const char* fiber_kind_name(FiberKind k) {
  switch (k) {
    case FiberKind::Semisimple:
      return "semisimple";
    case FiberKind::Truncated:
      return "truncated";
    default:
      return "local-singular";
  }
}

/// Vanishing pattern of the central elements b_i, c_i on the stratum.
struct FiberClass {
  std::vector<FiberKind> kinds;  ///< index i-1 for simple index i
  std::vector<bool> b_zero, c_zero;
};

inline FiberClass fiber_class(const StratumPair& p) {
  const WeylElement w0 = longest_element(p.w1.group());
  const WeylElement u = w0 * p.w1, v = w0 * p.w2;
  FiberClass fc;
  for (int i = 1; i <= static_cast<int>(p.w1.rank()); ++i) {
    const bool b = stabilizes_weight(u, i), c = stabilizes_weight(v, i);
    fc.b_zero.push_back(!b);
    fc.c_zero.push_back(!c);
    fc.kinds.push_back(b && c ? FiberKind::Semisimple : (b || c) ? FiberKind::Truncated : FiberKind::LocalSingular);
  }
  return fc;
}

/// card of the block-label set: number of semisimple fiber indices.
inline std::size_t block_count_function_algebra(const StratumPair& p) {
  return block_label_indices(p.w1, p.w2).size();
}

inline bool is_fully_azumaya(const StratumPair& p) {
  return length(p.w1) + length(p.w2) + rank_s(p.twist) == 2 * p.w1.cartan().N;
}

inline RepType rep_type_function_algebra(const StratumPair& p) {
  const std::size_t n = p.w1.cartan().N;
  return length(p.w1) + length(p.w2) + 1 >= 2 * n ? RepType::Finite : RepType::Wild;
}

inline RepType rep_type_borel(const WeylElement& w) {
  return length(w) + 1 >= w.cartan().N ? RepType::Finite : RepType::Wild;
}

/// Fibre over a fully Azumaya point: ell^{summand_count_exp} copies of
/// Mat_{ell^{matrix_size_exp}}(k[X_1..X_s]/(X_j^ell)).
struct AzumayaStructure {
  std::size_t summand_count_exp = 0;
  std::size_t matrix_size_exp = 0;
  std::size_t truncated_vars = 0;
};

inline AzumayaStructure azumaya_structure(const StratumPair& p) {
  if (!is_fully_azumaya(p)) throw NotAzumaya("stratum is not in the fully Azumaya locus");
  const std::size_t s = rank_s(p.twist);
  return {p.w1.rank() - s, p.w1.cartan().N, s};
}

struct StratumInvariants {
  std::int64_t ell = 0;
  std::size_t r = 0, N = 0;
  std::size_t len1 = 0, len2 = 0, s_twist = 0;
  std::int64_t twist_order = 1;
  std::size_t algebra_dim_exp = 0;  ///< 2N + r
  std::size_t simple_count_exp = 0;
  std::size_t simple_dim_exp = 0;
  bool is_azumaya = false;
  bool is_semisimple = false;
  RepType rep_type = RepType::Wild;
  std::vector<int> frak_s;
  FiberClass fiber;
  /// Block data need ell prime to ord(twist); empty otherwise.
  std::optional<std::size_t> block_count_exp;
  std::optional<std::size_t> simples_per_block_exp;
  std::optional<EllSubgroup> normalizer;
};

inline StratumInvariants stratum_invariants(const StratumPair& p) {
  const CartanData& cd = p.w1.cartan();
  require_good_ell(cd, p.ell.ell);
  StratumInvariants s;
  s.ell = p.ell.ell;
  s.r = cd.r;
  s.N = cd.N;
  s.len1 = length(p.w1);
  s.len2 = length(p.w2);
  s.s_twist = rank_s(p.twist);
  s.twist_order = order(p.twist);
  s.algebra_dim_exp = 2 * cd.N + cd.r;
  s.simple_count_exp = cd.r - s.s_twist;
  if ((s.len1 + s.len2 + s.s_twist) % 2 != 0)
    throw Error("len1 + len2 + s(twist) is odd; simple dimension would not be a power of ell");
  s.simple_dim_exp = (s.len1 + s.len2 + s.s_twist) / 2;
  s.is_azumaya = s.len1 + s.len2 + s.s_twist == 2 * cd.N;
  s.rep_type = rep_type_function_algebra(p);
  s.frak_s = block_label_indices(p.w1, p.w2);
  s.fiber = fiber_class(p);
  s.is_semisimple = 2 * s.simple_dim_exp + s.simple_count_exp == s.algebra_dim_exp;
  if (std::gcd(s.ell, s.twist_order) == 1) {
    s.block_count_exp = s.frak_s.size();
    if (s.frak_s.size() > s.simple_count_exp) throw Error("more blocks than simple modules");
    s.simples_per_block_exp = s.simple_count_exp - s.frak_s.size();
    s.normalizer = normalizer_lattice(s.ell, p.w1, p.w2);
  }
  return s;
}

/// Which closed-form rule fixed the Borel block count.
enum class BorelBlockRule { DistinctLetters, Longest, UniqueBlockType, LongestTimesSimple, Interval };

inline const char* borel_rule_name(BorelBlockRule r) {
  switch (r) {
    case BorelBlockRule::DistinctLetters:
      return "distinct-letters";
    case BorelBlockRule::Longest:
      return "longest-element";
    case BorelBlockRule::UniqueBlockType:
      return "unique-block-type";
    case BorelBlockRule::LongestTimesSimple:
      return "longest-times-simple";
    default:
      return "interval";
  }
}

struct BorelInvariants {
  std::int64_t ell = 0;
  std::size_t r = 0, N = 0;
  std::size_t len = 0, s_w = 0, d = 0;
  std::int64_t w_order = 1;
  std::size_t algebra_dim_exp = 0;  ///< N + r
  std::size_t simple_count_exp = 0;
  std::size_t simple_dim_exp = 0;
  RepType rep_type = RepType::Wild;
  /// Block data need ell prime to ord(w); false otherwise and the fields below are unset.
  bool block_data_available = false;
  bool blocks_exact = false;
  BorelBlockRule rule = BorelBlockRule::Interval;
  std::size_t block_lower_exp = 0, block_upper_exp = 0;  ///< equal when exact
};

/// Types whose Borel algebra has a unique block at every point (s(w0) = r).
inline bool has_unique_borel_block_type(const CartanType& t) {
  switch (t.family) {
    case 'B':
    case 'C':
    case 'F':
    case 'G':
      return true;
    case 'D':
      return t.rank % 2 == 0;
    case 'E':
      return t.rank == 7 || t.rank == 8;
    default:
      return false;
  }
}

inline BorelInvariants borel_invariants(const WeylElement& w, std::int64_t ell) {
  const CartanData& cd = w.cartan();
  require_good_ell(cd, ell);
  BorelInvariants b;
  b.ell = ell;
  b.r = cd.r;
  b.N = cd.N;
  b.len = length(w);
  b.s_w = rank_s(w);
  const WeylWord word = reduced_word(w);
  b.d = cd.r - letters(word).size();
  b.w_order = order(w);
  b.algebra_dim_exp = cd.N + cd.r;
  b.simple_count_exp = cd.r - b.s_w;
  if ((b.len + b.s_w) % 2 != 0) throw Error("len + s(w) is odd");
  b.simple_dim_exp = (b.len + b.s_w) / 2;
  b.rep_type = rep_type_borel(w);
  if (std::gcd(ell, b.w_order) != 1) return b;
  b.block_data_available = true;

  const WeylElement w0 = longest_element(w.group());
  const std::size_t s0 = rank_s(w0);
  auto exact = [&](BorelBlockRule rule, std::size_t e) {
    b.blocks_exact = true;
    b.rule = rule;
    b.block_lower_exp = b.block_upper_exp = e;
  };
  const WeylElement u = w0 * w;
  if (b.len == b.s_w) {
    exact(BorelBlockRule::DistinctLetters, 0);
  } else if (w == w0) {
    exact(BorelBlockRule::Longest, cd.r - s0);
  } else if (has_unique_borel_block_type(cd.cartan_type)) {
    exact(BorelBlockRule::UniqueBlockType, 0);
  } else if (length(u) == 1) {
    const int i = reduced_word(u).front();
    IntVec alpha(cd.r, 0);
    alpha[static_cast<std::size_t>(i - 1)] = 1;
    IntVec neg = alpha;
    for (auto& x : neg) x = -x;
    const bool negated = w0.act_on_root(alpha) == neg;
    exact(BorelBlockRule::LongestTimesSimple, negated ? cd.r - s0 : cd.r - s0 - 1);
  } else {
    // blocks = simples / k with ell^d <= k <= ell^{r-s(w)}, and at most ell^{r-s(w0)} overall
    b.rule = BorelBlockRule::Interval;
    b.block_lower_exp = 0;
    if (b.d > b.simple_count_exp) throw Error("absent-letter count exceeds rank of the fixed lattice");
    b.block_upper_exp = std::min(b.simple_count_exp - b.d, cd.r - s0);
  }
  return b;
}

/// Exponent bookkeeping for the algebra, its simple modules and the big cell.
struct DimensionBookkeeping {
  std::size_t group_dim_exp = 0;    ///< 2N + r
  std::size_t borel_dim_exp = 0;    ///< N + r
  bool identity_holds = false;      ///< (2N+r) + r == 2 (N+r)
  std::size_t semisimple_part_exp = 0;  ///< exponent of count * dim^2 over the simples
  bool semisimple = false;          ///< semisimple_part_exp == 2N + r
};

inline DimensionBookkeeping dimension_bookkeeping(const StratumPair& p) {
  const CartanData& cd = p.w1.cartan();
  DimensionBookkeeping d;
  d.group_dim_exp = 2 * cd.N + cd.r;
  d.borel_dim_exp = cd.N + cd.r;
  d.identity_holds = d.group_dim_exp + cd.r == 2 * d.borel_dim_exp;
  const std::size_t s = rank_s(p.twist);
  const std::size_t total = length(p.w1) + length(p.w2) + s;
  if (total % 2 != 0) throw Error("len1 + len2 + s(twist) is odd");
  d.semisimple_part_exp = (cd.r - s) + total;
  d.semisimple = d.semisimple_part_exp == d.group_dim_exp;
  return d;
}

}  // namespace qstrata
