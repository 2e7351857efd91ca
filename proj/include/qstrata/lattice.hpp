#pragma once

// Exact sublattices of Z^r (weight or root coordinates) and subgroups of
// (Z/ell)^r. Every mod-ell computation is done on the integer preimage
// lattice L with ell Z^r <= L <= Z^r and only reduced at the end, so nothing
// here assumes ell is prime.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "intmat.hpp"
#include "weyl.hpp"

namespace qstrata {

using BigVec = std::vector<BigInt>;
using BigMat = std::vector<BigVec>;  // row-major, rows are vectors

enum class BasisKind { Weight, Root };

inline const char* basis_kind_name(BasisKind k) { return k == BasisKind::Weight ? "weight" : "root"; }

namespace lattice_detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  g = old_r;
  x = old_s;
  y = old_t;
  if (g < 0) {
    g = -g;
    x = -x;
    y = -y;
  }
}

inline BigMat to_big(const std::vector<IntVec>& rows) {
  BigMat m;
  for (const auto& r : rows) {
    BigVec v;
    for (auto x : r) v.emplace_back(x);
    m.push_back(std::move(v));
  }
  return m;
}

inline std::int64_t to_i64(const BigInt& x) {
  if (x > BigInt(INT64_MAX) || x < BigInt(INT64_MIN)) throw Error("lattice entry overflows int64");
  return x.convert_to<std::int64_t>();
}

}  // namespace lattice_detail

struct HermiteResult {
  BigMat H;        ///< U * M, row echelon, positive pivots, reduced above pivots
  BigMat U;        ///< unimodular transform
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Row Hermite normal form with unimodular transform. Rows rank..m-1 of U
/// span the left kernel of M (a saturated sublattice).
inline HermiteResult hermite(const BigMat& M, std::size_t cols) {
  using namespace lattice_detail;
  HermiteResult res;
  res.H = M;
  const std::size_t m = M.size();
  res.U.assign(m, BigVec(m, 0));
  for (std::size_t i = 0; i < m; ++i) res.U[i][i] = 1;
  auto& H = res.H;
  auto& U = res.U;
  auto combine = [](BigVec& p, BigVec& q, const BigInt& a, const BigInt& b, const BigInt& c,
                    const BigInt& d) {  // (p, q) <- (a p + b q, c p + d q)
    for (std::size_t k = 0; k < p.size(); ++k) {
      BigInt np = a * p[k] + b * q[k];
      BigInt nq = c * p[k] + d * q[k];
      p[k] = std::move(np);
      q[k] = std::move(nq);
    }
  };
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m; ++col) {
    for (std::size_t i = row + 1; i < m; ++i) {
      if (H[i][col] == 0) continue;
      if (H[row][col] == 0) {
        std::swap(H[row], H[i]);
        std::swap(U[row], U[i]);
        continue;
      }
      BigInt g, x, y;
      ext_gcd(H[row][col], H[i][col], g, x, y);
      const BigInt a = H[row][col] / g, b = H[i][col] / g;
      combine(H[row], H[i], x, y, -b, a);
      combine(U[row], U[i], x, y, -b, a);
    }
    if (H[row][col] == 0) continue;
    if (H[row][col] < 0) {
      for (auto& v : H[row]) v = -v;
      for (auto& v : U[row]) v = -v;
    }
    for (std::size_t k = 0; k < row; ++k) {
      const BigInt q = floor_div(H[k][col], H[row][col]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) H[k][j] -= q * H[row][j];
      for (std::size_t j = 0; j < m; ++j) U[k][j] -= q * U[row][j];
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

/// Nonzero diagonal entries of the Smith normal form (each divides the next).
inline std::vector<BigInt> smith_invariants(BigMat A, std::size_t cols) {
  using namespace lattice_detail;
  const std::size_t m = A.size();
  std::vector<BigInt> diag;
  std::size_t t = 0;
  while (t < m && t < cols) {
    // pick the smallest nonzero entry in the trailing block as pivot
    bool found = false;
    std::size_t pi = 0, pj = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (A[i][j] != 0 && (!found || abs(A[i][j]) < abs(A[pi][pj]))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    std::swap(A[t], A[pi]);
    for (auto& row : A) std::swap(row[t], row[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A[i][t] == 0) continue;
        const BigInt q = A[i][t] / A[t][t];
        for (std::size_t j = t; j < cols; ++j) A[i][j] -= q * A[t][j];
        if (A[i][t] != 0) {
          std::swap(A[t], A[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (A[t][j] == 0) continue;
        const BigInt q = A[t][j] / A[t][t];
        for (std::size_t i = t; i < m; ++i) A[i][j] -= q * A[i][t];
        if (A[t][j] != 0) {
          for (auto& row : A) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility: fold any entry not divisible by the pivot into row t
        for (std::size_t i = t + 1; i < m && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (A[i][j] % A[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) A[t][k] += A[i][k];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(abs(A[t][t]));
    ++t;
  }
  return diag;
}

/// A sublattice of Z^r in weight (varpi) or root (alpha) coordinates, held in
/// Hermite normal form.
class SubLattice {
 public:
  SubLattice() = default;
  SubLattice(BasisKind kind, std::size_t ambient_rank, const std::vector<IntVec>& generators)
      : kind_(kind), r_(ambient_rank) {
    for (const auto& g : generators)
      if (g.size() != r_) throw Error("generator has wrong length");
    set_from(lattice_detail::to_big(generators));
  }
  SubLattice(BasisKind kind, std::size_t ambient_rank, const BigMat& generators)
      : kind_(kind), r_(ambient_rank) {
    set_from(generators);
  }

  static SubLattice full(BasisKind kind, std::size_t r) {
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < r; ++i) {
      IntVec e(r, 0);
      e[i] = 1;
      gens.push_back(e);
    }
    return SubLattice(kind, r, gens);
  }
  static SubLattice zero(BasisKind kind, std::size_t r) { return SubLattice(kind, r, std::vector<IntVec>{}); }

  BasisKind basis_kind() const noexcept { return kind_; }
  std::size_t ambient_rank() const noexcept { return r_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const BigMat& basis() const noexcept { return basis_; }

  std::vector<IntVec> generators() const {
    std::vector<IntVec> out;
    for (const auto& row : basis_) {
      IntVec v;
      for (const auto& x : row) v.push_back(lattice_detail::to_i64(x));
      out.push_back(std::move(v));
    }
    return out;
  }

  bool contains(const BigVec& v) const {
    BigMat m = basis_;
    m.push_back(v);
    return SubLattice(kind_, r_, m).basis_ == basis_;
  }
  bool contains(const IntVec& v) const {
    BigVec b(v.begin(), v.end());
    return contains(b);
  }

  bool is_subset_of(const SubLattice& other) const {
    check_compatible(other);
    for (const auto& row : basis_)
      if (!other.contains(row)) return false;
    return true;
  }

  /// Absolute index [Z^r : L] for full-rank L (product of HNF pivots).
  BigInt determinant() const {
    if (rank() != r_) return 0;
    BigInt d = 1;
    for (std::size_t i = 0; i < r_; ++i) d *= basis_[i][i];
    return d;
  }

  void check_compatible(const SubLattice& other) const {
    if (kind_ != other.kind_ || r_ != other.r_)
      throw Error("lattices live in different ambient lattices");
  }

  friend bool operator==(const SubLattice& a, const SubLattice& b) {
    return a.kind_ == b.kind_ && a.r_ == b.r_ && a.basis_ == b.basis_;
  }

 private:
  void set_from(const BigMat& gens) {
    basis_.clear();
    if (gens.empty()) return;
    HermiteResult h = hermite(gens, r_);
    for (std::size_t i = 0; i < h.rank; ++i) basis_.push_back(h.H[i]);
  }

  BasisKind kind_ = BasisKind::Root;
  std::size_t r_ = 0;
  BigMat basis_;
};

inline SubLattice lattice_sum(const SubLattice& a, const SubLattice& b) {
  a.check_compatible(b);
  BigMat m = a.basis();
  m.insert(m.end(), b.basis().begin(), b.basis().end());
  return SubLattice(a.basis_kind(), a.ambient_rank(), m);
}

/// Intersection via the left kernel of the stacked bases.
inline SubLattice lattice_intersection(const SubLattice& a, const SubLattice& b) {
  a.check_compatible(b);
  const std::size_t r = a.ambient_rank();
  if (a.rank() == 0 || b.rank() == 0) return SubLattice::zero(a.basis_kind(), r);
  BigMat stacked = a.basis();
  stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
  const HermiteResult h = hermite(stacked, r);
  BigMat gens;
  for (std::size_t k = h.rank; k < stacked.size(); ++k) {
    BigVec v(r, 0);
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < r; ++j) v[j] += h.U[k][i] * a.basis()[i][j];
    gens.push_back(std::move(v));
  }
  return SubLattice(a.basis_kind(), r, gens);
}

/// Saturated kernel {x : M x = 0} of a square integer matrix acting on columns.
inline SubLattice integer_kernel(BasisKind kind, const IntMatrix& M) {
  const std::size_t r = M.cols();
  BigMat rows;  // rows of M^T
  for (std::size_t j = 0; j < r; ++j) {
    BigVec v;
    for (std::size_t i = 0; i < M.rows(); ++i) v.emplace_back(M(i, j));
    rows.push_back(std::move(v));
  }
  const HermiteResult h = hermite(rows, M.rows());
  BigMat gens(h.U.begin() + static_cast<std::ptrdiff_t>(h.rank), h.U.end());
  return SubLattice(kind, r, gens);
}

/// P^w (weight coordinates) or Q^w (root coordinates), saturated.
inline SubLattice fixed_lattice(const WeylElement& w, BasisKind which) {
  const IntMatrix& m = which == BasisKind::Weight ? w.matrix() : w.root_matrix();
  return integer_kernel(which, m - IntMatrix::identity(w.rank()));
}

/// A_w = span of the root sequence of a reduced word, checked against the span
/// of the simple roots of its letters.
inline SubLattice a_w_lattice(const WeylGroup& g, const WeylWord& word) {
  const RootSequence seq = root_sequence(g, word);
  const std::size_t r = g->cd.r;
  SubLattice via_roots(BasisKind::Root, r, seq.betas);
  std::vector<IntVec> simple;
  for (int i : letters(word)) {
    IntVec e(r, 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    simple.push_back(e);
  }
  SubLattice via_letters(BasisKind::Root, r, simple);
  if (!(via_roots == via_letters))
    throw Error("A_w mismatch: root-sequence span differs from letter span for word " +
                format_word(word));
  return via_roots;
}

/// B^w = (A_w)^perp = span of varpi_j over letters j absent from the reduced word.
inline SubLattice b_w_lattice(const WeylGroup& g, const WeylWord& word) {
  require_reduced(g, word);
  const std::size_t r = g->cd.r;
  const auto present = letters(word);
  std::vector<IntVec> gens;
  for (int j = 1; j <= static_cast<int>(r); ++j) {
    if (std::binary_search(present.begin(), present.end(), j)) continue;
    IntVec e(r, 0);
    e[static_cast<std::size_t>(j - 1)] = 1;
    gens.push_back(e);
  }
  SubLattice b(BasisKind::Weight, r, gens);
  if (!b.is_subset_of(fixed_lattice(from_word(g, word), BasisKind::Weight)))
    throw Error("B^w not contained in P^w for word " + format_word(word));
  return b;
}

/// Subgroup of (Z/ell)^r, stored as its preimage lattice L with ell Z^r <= L.
class EllSubgroup {
 public:
  EllSubgroup() = default;
  /// Image of an integer lattice in (Z/ell)^r.
  EllSubgroup(const SubLattice& lattice, std::int64_t ell)
      : ell_(ell), preimage_(lattice_sum(lattice, scaled_identity(lattice, ell))) {}

  static EllSubgroup from_preimage(const SubLattice& preimage, std::int64_t ell) {
    EllSubgroup s;
    s.ell_ = ell;
    s.preimage_ = preimage;
    return s;
  }

  static EllSubgroup whole(BasisKind kind, std::size_t r, std::int64_t ell) {
    return EllSubgroup(SubLattice::full(kind, r), ell);
  }
  static EllSubgroup trivial(BasisKind kind, std::size_t r, std::int64_t ell) {
    return EllSubgroup(SubLattice::zero(kind, r), ell);
  }

  std::int64_t ell() const noexcept { return ell_; }
  BasisKind basis_kind() const noexcept { return preimage_.basis_kind(); }
  std::size_t ambient_rank() const noexcept { return preimage_.ambient_rank(); }
  const SubLattice& preimage() const noexcept { return preimage_; }

  /// Nonzero rows of the Hermite basis, reduced mod ell.
  std::vector<IntVec> generators() const {
    std::vector<IntVec> out;
    for (const auto& row : preimage_.basis()) {
      IntVec v;
      bool nonzero = false;
      for (const auto& x : row) {
        std::int64_t y = lattice_detail::to_i64(((x % ell_) + ell_) % ell_);
        nonzero = nonzero || y != 0;
        v.push_back(y);
      }
      if (nonzero) out.push_back(std::move(v));
    }
    return out;
  }

  BigInt order() const {
    BigInt full = 1;
    for (std::size_t i = 0; i < ambient_rank(); ++i) full *= ell_;
    return full / preimage_.determinant();
  }

  /// k with order = ell^k, or -1 when the order is not a power of ell.
  int order_exponent() const {
    BigInt o = order();
    int k = 0;
    while (o > 1) {
      if (o % ell_ != 0) return -1;
      o /= ell_;
      ++k;
    }
    return k;
  }

  bool contains(const IntVec& v) const { return preimage_.contains(v); }

  bool is_subgroup_of(const EllSubgroup& other) const {
    return ell_ == other.ell_ && preimage_.is_subset_of(other.preimage_);
  }

  /// Every element as a vector with entries in [0, ell), lexicographically sorted.
  std::vector<IntVec> elements() const {
    const std::size_t r = ambient_rank();
    const auto& B = preimage_.basis();
    std::vector<std::int64_t> span(r);
    for (std::size_t i = 0; i < r; ++i)
      span[i] = ell_ / lattice_detail::to_i64(B[i][i]);
    std::vector<IntVec> out;
    IntVec coeff(r, 0);
    for (;;) {
      IntVec v(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          v[j] += coeff[i] * lattice_detail::to_i64(B[i][j] % ell_);
      for (auto& x : v) x = ((x % ell_) + ell_) % ell_;
      out.push_back(std::move(v));
      std::size_t k = 0;
      while (k < r && ++coeff[k] == span[k]) coeff[k++] = 0;
      if (k == r) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const EllSubgroup& a, const EllSubgroup& b) {
    return a.ell_ == b.ell_ && a.preimage_ == b.preimage_;
  }

 private:
  static SubLattice scaled_identity(const SubLattice& like, std::int64_t ell) {
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < like.ambient_rank(); ++i) {
      IntVec e(like.ambient_rank(), 0);
      e[i] = ell;
      gens.push_back(e);
    }
    return SubLattice(like.basis_kind(), like.ambient_rank(), gens);
  }

  std::int64_t ell_ = 0;
  SubLattice preimage_;
};

inline EllSubgroup subgroup_intersection(const EllSubgroup& a, const EllSubgroup& b) {
  if (a.ell() != b.ell()) throw Error("subgroups of different (Z/ell)^r");
  return EllSubgroup::from_preimage(lattice_intersection(a.preimage(), b.preimage()), a.ell());
}

inline EllSubgroup subgroup_sum(const EllSubgroup& a, const EllSubgroup& b) {
  if (a.ell() != b.ell()) throw Error("subgroups of different (Z/ell)^r");
  return EllSubgroup::from_preimage(lattice_sum(a.preimage(), b.preimage()), a.ell());
}

/// Fixed points of w on (Z/ell)^r: { x : (w - 1) x = 0 mod ell }.
inline EllSubgroup fixed_points_mod_ell(const WeylElement& w, BasisKind which, std::int64_t ell) {
  const IntMatrix& m = which == BasisKind::Weight ? w.matrix() : w.root_matrix();
  const std::size_t r = w.rank();
  const IntMatrix b = m - IntMatrix::identity(r);
  // left kernel of [B^T ; ell I] restricted to the first r coordinates
  BigMat rows;
  for (std::size_t j = 0; j < r; ++j) {
    BigVec v;
    for (std::size_t i = 0; i < r; ++i) v.emplace_back(b(i, j));
    rows.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < r; ++j) {
    BigVec v(r, 0);
    v[j] = ell;
    rows.push_back(std::move(v));
  }
  const HermiteResult h = hermite(rows, r);
  BigMat gens;
  for (std::size_t k = h.rank; k < rows.size(); ++k)
    gens.emplace_back(h.U[k].begin(), h.U[k].begin() + static_cast<std::ptrdiff_t>(r));
  return EllSubgroup(SubLattice(which, r, gens), ell);
}

/// Invariant factors (> 1) of super/sub, via Smith form of sub's coordinates
/// in super's Hermite basis.
inline std::vector<BigInt> quotient_invariants(const EllSubgroup& sub, const EllSubgroup& super) {
  if (!sub.is_subgroup_of(super)) throw ContainmentError("subgroup is not contained in supergroup");
  const std::size_t r = super.ambient_rank();
  const BigMat& S = super.preimage().basis();  // square upper triangular
  BigMat coords;
  for (const auto& v : sub.preimage().basis()) {
    BigVec c(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      BigInt rem = v[i];
      for (std::size_t k = 0; k < i; ++k) rem -= c[k] * S[k][i];
      if (rem % S[i][i] != 0) throw ContainmentError("coordinates are not integral");
      c[i] = rem / S[i][i];
    }
    coords.push_back(std::move(c));
  }
  std::vector<BigInt> out;
  for (auto& d : smith_invariants(coords, r))
    if (d > 1) out.push_back(d);
  return out;
}

/// { i : w0 w1 and w0 w2 both fix varpi_i }, 1-based ascending.
inline std::vector<int> block_label_indices(const WeylElement& w1, const WeylElement& w2) {
  const WeylElement w0 = longest_element(w1.group());
  const auto a = stabilized_fundamentals(w0 * w1);
  const auto b = stabilized_fundamentals(w0 * w2);
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Winding-automorphism normaliser of a block:
///   N(w1, w2) = Q_ell^w  cap  sum_{i not in S} Z alpha_i  (mod ell),  w = w2^{-1} w1.
/// Requires good ell prime to ord(w).
inline EllSubgroup normalizer_lattice(std::int64_t ell, const WeylElement& w1, const WeylElement& w2) {
  const CartanData& cd = w1.cartan();
  require_good_ell(cd, ell);
  const WeylElement twist = w2.inverse() * w1;
  const std::int64_t ord = order(twist);
  const std::int64_t g = std::gcd(ell, ord);
  if (g != 1)
    throw CoprimalityError("ell = " + std::to_string(ell) + " is not prime to ord(w2^-1 w1) = " +
                               std::to_string(ord),
                           g);
  const std::size_t r = cd.r;
  const EllSubgroup fixed(fixed_lattice(twist, BasisKind::Root), ell);
  const auto labels = block_label_indices(w1, w2);
  std::vector<IntVec> gens;
  for (int i = 1; i <= static_cast<int>(r); ++i) {
    if (std::binary_search(labels.begin(), labels.end(), i)) continue;
    IntVec e(r, 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    gens.push_back(e);
  }
  const EllSubgroup span(SubLattice(BasisKind::Root, r, gens), ell);
  return subgroup_intersection(fixed, span);
}

}  // namespace qstrata
