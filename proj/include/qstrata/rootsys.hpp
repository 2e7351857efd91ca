#pragma once

// Root-system data for the finite Cartan types.
//
// Convention: a_ij = <alpha_j, alpha_i^vee>, so that
//   s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
// Column i of the Cartan matrix holds the fundamental-weight coordinates of
// alpha_i. Bourbaki numbering throughout (B_r: alpha_r short, C_r: alpha_r
// long, G_2: alpha_1 short, F_4: alpha_3, alpha_4 short).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "intmat.hpp"

namespace qstrata {

struct CartanType {
  char family = 'A';
  int rank = 1;

  std::string label() const { return std::string(1, family) + std::to_string(rank); }
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Canonical form of a Cartan type: B1 and C1 become A1, C2 becomes B2.
/// Throws InvalidCartanType for combinations outside the finite list.
inline CartanType canonical_type(char family, int rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  auto bad = [&] {
    throw InvalidCartanType("invalid Cartan type " + std::string(1, family) +
                            std::to_string(rank));
  };
  if (rank < 1) bad();
  switch (family) {
    case 'A':
      return {'A', rank};
    case 'B':
    case 'C':
      if (rank == 1) return {'A', 1};
      if (rank == 2) return {'B', 2};
      return {family, rank};
    case 'D':
      if (rank < 4) bad();
      return {'D', rank};
    case 'E':
      if (rank < 6 || rank > 8) bad();
      return {'E', rank};
    case 'F':
      if (rank != 4) bad();
      return {'F', 4};
    case 'G':
      if (rank != 2) bad();
      return {'G', 2};
    default:
      bad();
  }
  return {};
}

/// Parses "A3", "d4", "G2" (case-insensitive).
inline CartanType parse_cartan_type(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
    throw ParseError("expected a Cartan family letter in '" + text + "'", pos);
  const char family = text[pos++];
  const std::size_t digits_at = pos;
  int rank = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    rank = rank * 10 + (text[pos] - '0');
    if (rank > 1000) throw ParseError("rank too large in '" + text + "'", digits_at);
    ++pos;
  }
  if (pos == digits_at) throw ParseError("expected a rank in '" + text + "'", pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing characters in '" + text + "'", pos);
  return canonical_type(family, rank);
}

namespace detail {

inline IntMatrix build_cartan_matrix(const CartanType& t) {
  const int r = t.rank;
  IntMatrix a(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  auto link = [&](int i, int j) {  // 1-based simple bond
    a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = -1;
    a(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = -1;
  };
  auto set = [&](int i, int j, std::int64_t v) {
    a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
  };
  for (int i = 1; i <= r; ++i) set(i, i, 2);
  switch (t.family) {
    case 'A':
      for (int i = 1; i < r; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < r; ++i) link(i, i + 1);
      set(r, r - 1, -2);
      break;
    case 'C':
      for (int i = 1; i < r; ++i) link(i, i + 1);
      set(r - 1, r, -2);
      break;
    case 'D':
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      link(r - 2, r);
      break;
    case 'E':
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < r; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      link(2, 3);
      link(3, 4);
      set(3, 2, -2);
      break;
    case 'G':
      link(1, 2);
      set(1, 2, -3);
      break;
    default:
      throw InvalidCartanType("unknown family");
  }
  return a;
}

/// Coprime positive d with d_i a_ij = d_j a_ji, propagated along the Dynkin graph.
inline IntVec symmetrizers(const IntMatrix& a) {
  const std::size_t r = a.rows();
  std::vector<std::int64_t> num(r, 0), den(r, 1);
  num[0] = 1;
  std::vector<std::size_t> stack{0};
  std::vector<bool> seen(r, false);
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < r; ++j) {
      if (seen[j] || a(i, j) == 0) continue;
      // d_j = d_i a_ij / a_ji
      num[j] = num[i] * a(i, j);
      den[j] = den[i] * a(j, i);
      if (den[j] < 0) {
        num[j] = -num[j];
        den[j] = -den[j];
      }
      const std::int64_t g = std::gcd(num[j], den[j]);
      num[j] /= g;
      den[j] /= g;
      seen[j] = true;
      stack.push_back(j);
    }
  }
  std::int64_t l = 1;
  for (auto d : den) l = std::lcm(l, d);
  IntVec d(r);
  for (std::size_t i = 0; i < r; ++i) d[i] = num[i] * (l / den[i]);
  const std::int64_t g = gcd_all(d);
  for (auto& x : d) x /= g;
  return d;
}

/// <beta, alpha_i^vee> for beta in alpha-coordinates.
inline std::int64_t coroot_pairing(const IntMatrix& a, const IntVec& beta, std::size_t i) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += a(i, j) * beta[j];
  return s;
}

inline std::int64_t height(const IntVec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace detail

/// Immutable root datum of a finite Cartan type.
struct CartanData {
  CartanType cartan_type;
  IntMatrix a;           ///< Cartan matrix, a(i,j) = <alpha_j, alpha_i^vee>
  IntVec d;              ///< symmetrizers, gcd 1
  std::vector<IntVec> pos_roots;  ///< alpha-coordinates, sorted by height then lexicographically
  std::size_t N = 0;
  std::size_t r = 0;
  std::int64_t h = 0;    ///< Coxeter number, 2N/r
  IntVec theta_coeffs;   ///< highest root in alpha-coordinates

  /// Fundamental-weight coordinates of a vector given in alpha-coordinates.
  IntVec alpha_to_weight(const IntVec& beta) const {
    IntVec x(r, 0);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < r; ++i) x[j] += a(j, i) * beta[i];
    return x;
  }

  bool is_root(const IntVec& beta) const {
    IntVec neg(beta);
    for (auto& x : neg) x = -x;
    return std::binary_search(pos_roots.begin(), pos_roots.end(), beta, root_order) ||
           std::binary_search(pos_roots.begin(), pos_roots.end(), neg, root_order);
  }

  static bool root_order(const IntVec& x, const IntVec& y) {
    const auto hx = detail::height(x), hy = detail::height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  }
};

/// Full root datum; positive roots come from closing the simple roots under
/// the simple reflections and keeping the positive images.
inline CartanData cartan_data(const CartanType& requested) {
  CartanData cd;
  cd.cartan_type = canonical_type(requested.family, requested.rank);
  cd.a = detail::build_cartan_matrix(cd.cartan_type);
  cd.r = static_cast<std::size_t>(cd.cartan_type.rank);
  cd.d = detail::symmetrizers(cd.a);

  std::set<IntVec> roots;
  std::vector<IntVec> frontier;
  for (std::size_t i = 0; i < cd.r; ++i) {
    IntVec e(cd.r, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& beta : frontier) {
      for (std::size_t i = 0; i < cd.r; ++i) {
        const std::int64_t c = detail::coroot_pairing(cd.a, beta, i);
        if (c == 0) continue;
        IntVec img = beta;
        img[i] -= c;
        if (std::any_of(img.begin(), img.end(), [](std::int64_t x) { return x < 0; })) continue;
        if (roots.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  cd.pos_roots.assign(roots.begin(), roots.end());
  std::sort(cd.pos_roots.begin(), cd.pos_roots.end(), CartanData::root_order);
  cd.N = cd.pos_roots.size();
  cd.theta_coeffs = cd.pos_roots.back();
  cd.h = static_cast<std::int64_t>(2 * cd.N / cd.r);
  return cd;
}

inline CartanData cartan_data(const std::string& type_string) {
  return cartan_data(parse_cartan_type(type_string));
}

struct GoodEll {
  std::int64_t ell = 0;
  bool validated = false;
};

/// Goodness test: ell odd and prime to every d_i and every highest-root coefficient.
inline GoodEll is_good_ell(const CartanData& cd, std::int64_t ell) {
  GoodEll g{ell, false};
  if (ell <= 1 || ell % 2 == 0) return g;
  for (auto x : cd.d)
    if (std::gcd(ell, x) != 1) return g;
  for (auto x : cd.theta_coeffs)
    if (std::gcd(ell, x) != 1) return g;
  g.validated = true;
  return g;
}

inline void require_good_ell(const CartanData& cd, std::int64_t ell) {
  if (!is_good_ell(cd, ell).validated)
    throw BadEll("ell = " + std::to_string(ell) + " is not good for type " +
                 cd.cartan_type.label() +
                 " (needs odd ell prime to the symmetrizers and highest-root coefficients)");
}

/// Matrix of (varpi_i, alpha_j) = delta_ij d_i, reduced mod ell.
inline IntMatrix pairing_matrix_mod_ell(const CartanData& cd, std::int64_t ell) {
  require_good_ell(cd, ell);
  IntMatrix m(cd.r, cd.r);
  for (std::size_t i = 0; i < cd.r; ++i) m(i, i) = ((cd.d[i] % ell) + ell) % ell;
  return m;
}

/// All canonical finite types with rank in [1, max_rank], in a fixed order.
inline std::vector<CartanType> all_types_up_to_rank(int max_rank) {
  std::vector<CartanType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({'A', r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({'B', r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({'C', r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({'D', r});
  for (int r = 6; r <= std::min(max_rank, 8); ++r) out.push_back({'E', r});
  if (max_rank >= 4) out.push_back({'F', 4});
  if (max_rank >= 2) out.push_back({'G', 2});
  return out;
}

}  // namespace qstrata
