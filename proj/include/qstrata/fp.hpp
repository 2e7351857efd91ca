#pragma once

// Arithmetic and dense linear algebra over a prime field F_p (p < 2^31).

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qstrata::fp {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;
using Mat = std::vector<Vec>;  // row-major

inline Elem add(Elem a, Elem b, Elem p) { return static_cast<Elem>((std::uint64_t{a} + b) % p); }
inline Elem sub(Elem a, Elem b, Elem p) { return static_cast<Elem>((std::uint64_t{a} + p - b) % p); }
inline Elem mul(Elem a, Elem b, Elem p) { return static_cast<Elem>(std::uint64_t{a} * b % p); }
inline Elem neg(Elem a, Elem p) { return a == 0 ? 0 : p - a; }

inline Elem pow(Elem a, std::uint64_t e, Elem p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<Elem>(r);
}

inline Elem inv(Elem a, Elem p) {
  if (a % p == 0) throw AlgebraError("division by zero in F_" + std::to_string(p));
  return pow(a, p - 2, p);
}

/// Canonical representative of a signed integer.
inline Elem from_int(std::int64_t x, Elem p) {
  const std::int64_t m = x % static_cast<std::int64_t>(p);
  return static_cast<Elem>(m < 0 ? m + p : m);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Smallest prime p with p = 1 (mod ell) and p > min_dim.
inline Elem make_field_char(std::int64_t ell, std::int64_t min_dim) {
  if (ell < 2) throw AlgebraError("ell must be at least 2");
  for (std::uint64_t p = static_cast<std::uint64_t>(ell) + 1;; p += static_cast<std::uint64_t>(ell))
    if (p > static_cast<std::uint64_t>(min_dim) && is_prime(p)) return static_cast<Elem>(p);
}

/// Element of exact multiplicative order ell; requires ell | p - 1.
/// Deterministic: the first generator candidate g gives g^((p-1)/ell).
inline Elem root_of_unity(std::int64_t ell, Elem p) {
  const auto l = static_cast<std::uint64_t>(ell);
  if ((p - 1) % l != 0) throw FieldMismatch("F_" + std::to_string(p) + " has no primitive " + std::to_string(ell) + "-th root of unity");
  // prime factors of ell
  std::vector<std::uint64_t> primes;
  std::uint64_t m = l;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  for (Elem g = 2; g < p; ++g) {
    const Elem z = pow(g, (p - 1) / l, p);
    bool primitive = true;
    for (auto q : primes)
      if (pow(z, l / q, p) == 1) primitive = false;
    if (primitive) return z;
  }
  if (l == 1) return 1;
  throw FieldMismatch("no primitive root of unity found");
}

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& m, Elem p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Elem iv = inv(m[row][c], p);
    for (auto& x : m[row]) x = mul(x, iv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Elem f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[row][j]) m[i][j] = sub(m[i][j], mul(f, m[row][j], p), p);
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

inline std::size_t rank(Mat m, Elem p) { return rref(m, p).size(); }

/// Basis of { x : M x = 0 } for M with `cols` columns.
inline Mat nullspace(Mat m, std::size_t cols, Elem p) {
  const auto pivots = rref(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = neg(m[r][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Row-reduced basis of the span of the given vectors.
inline Mat span_basis(Mat vectors, Elem p) {
  rref(vectors, p);
  return vectors;
}

/// Coordinates of v in an independent list `basis`, or empty when v is not in the span.
inline Vec coordinates(const Mat& basis, const Vec& v, Elem p) {
  if (basis.empty()) {
    for (auto x : v)
      if (x) return {};
    return Vec{};
  }
  const std::size_t n = v.size(), k = basis.size();
  // columns are basis vectors, augmented with v
  Mat m(n, Vec(k + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = v[i];
  }
  const auto piv = rref(m, p);
  if (!piv.empty() && piv.back() == k) return {};
  Vec c(k, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = m[r][k];
  return c;
}

inline Vec mat_vec(const Mat& m, const Vec& v, Elem p) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s = (s + std::uint64_t{m[i][j]} * v[j]) % p;
    out[i] = static_cast<Elem>(s);
  }
  return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b, Elem p) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b.front().size();
  Mat c(n, Vec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = add(c[i][j], mul(a[i][t], b[t][j], p), p);
    }
  return c;
}

inline Mat identity(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline bool is_zero(const Vec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

/// Incrementally built subspace kept in reduced echelon form, for fast
/// membership tests.
class EchelonSpace {
 public:
  EchelonSpace(std::size_t ambient, Elem p) : n_(ambient), p_(p) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return n_; }
  const Mat& rows() const noexcept { return rows_; }

  /// v minus its projection along the pivots.
  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elem c = v[pivots_[r]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < n_; ++k)
        if (rows_[r][k]) v[k] = sub(v[k], mul(c, rows_[r][k], p_), p_);
    }
    return v;
  }
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  /// Adds v; returns false when it was already in the span.
  bool insert(const Vec& v) {
    Vec w = reduce(v);
    std::size_t piv = 0;
    while (piv < n_ && w[piv] == 0) ++piv;
    if (piv == n_) return false;
    const Elem iv = inv(w[piv], p_);
    for (auto& x : w) x = mul(x, iv, p_);
    for (auto& row : rows_) {
      const Elem c = row[piv];
      if (c == 0) continue;
      for (std::size_t k = 0; k < n_; ++k)
        if (w[k]) row[k] = sub(row[k], mul(c, w[k], p_), p_);
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    return true;
  }

 private:
  std::size_t n_;
  Elem p_;
  Mat rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace qstrata::fp
