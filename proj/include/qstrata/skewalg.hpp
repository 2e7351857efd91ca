#pragma once

// Brute-force oracle: finite-dimensional associative algebras over F_p given
// by structure constants, with radical, centre, blocks, skew group algebras
// of diagonalisable (Z/ell)^k actions and the character quiver of such a
// skew group algebra over a scalar local ring.
//
// F_p stands in for an algebraically closed field. Choose p = 1 (mod ell)
// and p > dim (make_field_char) so that ell-th roots of unity exist and the
// trace-form description of the radical is valid. Every algebra built here
// is split over F_p, which is the only setting the oracle claims to check.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fp.hpp"
#include "intmat.hpp"
#include "quiver.hpp"

namespace qstrata {

using fp::make_field_char;

struct SCTerm {
  std::uint32_t k;
  fp::Elem v;
};

/// e_i e_j = sum over table[i * dim + j] of v e_k.
class FDAlgebra {
 public:
  FDAlgebra() = default;
  FDAlgebra(std::size_t dim, fp::Elem p) : dim_(dim), p_(p), table_(dim * dim), unit_(dim, 0) {}

  std::size_t dim() const noexcept { return dim_; }
  fp::Elem field_char() const noexcept { return p_; }
  const fp::Vec& unit() const noexcept { return unit_; }
  const std::vector<SCTerm>& product_terms(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  /// Adds v to the coefficient of e_k in e_i e_j.
  void add_term(std::size_t i, std::size_t j, std::size_t k, fp::Elem v) {
    v %= p_;
    if (v == 0) return;
    auto& t = table_[i * dim_ + j];
    for (auto& term : t)
      if (term.k == k) {
        term.v = fp::add(term.v, v, p_);
        if (term.v == 0) t.erase(t.begin() + (&term - t.data()));
        return;
      }
    t.push_back({static_cast<std::uint32_t>(k), v});
  }
  void set_unit(fp::Vec u) { unit_ = std::move(u); }

  /// Algebra generators known to the constructor (empty: use the basis).
  const fp::Mat& generators() const noexcept { return generators_; }
  void set_generators(fp::Mat g) { generators_ = std::move(g); }

  fp::Vec basis_vector(std::size_t i) const {
    fp::Vec e(dim_, 0);
    e[i] = 1;
    return e;
  }

  fp::Vec multiply(const fp::Vec& x, const fp::Vec& y) const {
    std::vector<std::uint64_t> acc(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        const std::uint64_t c = std::uint64_t{x[i]} * y[j] % p_;
        for (const auto& t : table_[i * dim_ + j]) acc[t.k] = (acc[t.k] + c * t.v) % p_;
      }
    }
    fp::Vec out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = static_cast<fp::Elem>(acc[k]);
    return out;
  }

  fp::Vec basis_product(std::size_t i, std::size_t j) const {
    fp::Vec out(dim_, 0);
    for (const auto& t : table_[i * dim_ + j]) out[t.k] = t.v;
    return out;
  }

  fp::Vec power(fp::Vec x, std::uint64_t e) const {
    fp::Vec r = unit_;
    while (e) {
      if (e & 1) r = multiply(r, x);
      e >>= 1;
      if (e) x = multiply(x, x);
    }
    return r;
  }

 private:
  std::size_t dim_ = 0;
  fp::Elem p_ = 2;
  std::vector<std::vector<SCTerm>> table_;
  fp::Vec unit_;
  fp::Mat generators_;
};

constexpr std::size_t kExhaustiveAssociativityDim = 64;
constexpr std::size_t kAssociativitySamples = 1000;

/// Associativity on basis triples (exhaustive up to dim 64, else 1000 seeded
/// samples) and the unit axiom on basis vectors. Throws AlgebraError.
inline void validate_algebra(const FDAlgebra& a) {
  const std::size_t n = a.dim();
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    const fp::Vec left = a.multiply(a.basis_product(i, j), a.basis_vector(k));
    const fp::Vec right = a.multiply(a.basis_vector(i), a.basis_product(j, k));
    if (left != right)
      throw AlgebraError("structure constants are not associative at (" + std::to_string(i) + "," +
                         std::to_string(j) + "," + std::to_string(k) + ")");
  };
  if (n <= kExhaustiveAssociativityDim) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) check(i, j, k);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < kAssociativitySamples; ++s) check(pick(rng), pick(rng), pick(rng));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const fp::Vec e = a.basis_vector(i);
    if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e)
      throw AlgebraError("unit axiom fails at basis vector " + std::to_string(i));
  }
}

/// Builds an algebra from sparse triples (i, j, k, v) and validates it.
inline FDAlgebra make_algebra(std::size_t dim, fp::Elem p, const std::vector<std::array<std::int64_t, 4>>& sc,
                              const fp::Vec& unit) {
  if (!fp::is_prime(p)) throw AlgebraError("field characteristic " + std::to_string(p) + " is not prime");
  FDAlgebra a(dim, p);
  for (const auto& t : sc) {
    for (int c = 0; c < 3; ++c)
      if (t[static_cast<std::size_t>(c)] < 0 || static_cast<std::size_t>(t[static_cast<std::size_t>(c)]) >= dim)
        throw AlgebraError("structure constant index out of range");
    a.add_term(static_cast<std::size_t>(t[0]), static_cast<std::size_t>(t[1]), static_cast<std::size_t>(t[2]),
               fp::from_int(t[3], p));
  }
  if (unit.size() != dim) throw AlgebraError("unit has wrong length");
  a.set_unit(unit);
  validate_algebra(a);
  return a;
}

/// Span of all products u v, u in U, v in V (row bases).
inline fp::Mat product_space(const FDAlgebra& a, const fp::Mat& u, const fp::Mat& v) {
  fp::EchelonSpace span(a.dim(), a.field_char());
  for (const auto& x : u)
    for (const auto& y : v) {
      if (span.dim() == a.dim()) return span.rows();
      span.insert(a.multiply(x, y));
    }
  return span.rows();
}

inline bool subspace_contains(const fp::Mat& basis, const fp::Vec& v, fp::Elem p) {
  if (fp::is_zero(v)) return true;
  return !fp::coordinates(basis, v, p).empty();
}

inline fp::EchelonSpace echelon(const FDAlgebra& a, const fp::Mat& vectors) {
  fp::EchelonSpace s(a.dim(), a.field_char());
  for (const auto& v : vectors) s.insert(v);
  return s;
}

/// Gram matrix of T(x, y) = tr(L_{xy}) on the basis.
inline fp::Mat trace_form(const FDAlgebra& a) {
  const std::size_t n = a.dim();
  const fp::Elem p = a.field_char();
  // t_k = tr(L_{e_k}) = sum_m c_{k m}^m
  fp::Vec t(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (const auto& term : a.product_terms(k, m))
        if (term.k == m) t[k] = fp::add(t[k], term.v, p);
  fp::Mat form(n, fp::Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t s = 0;
      for (const auto& term : a.product_terms(i, j)) s = (s + std::uint64_t{term.v} * t[term.k]) % p;
      form[i][j] = static_cast<fp::Elem>(s);
    }
  return form;
}

/// Quotient A / I with basis the standard vectors outside the pivots of I.
struct QuotientAlgebra {
  FDAlgebra algebra;
  fp::Mat ideal;                        ///< reduced row echelon basis of I
  std::vector<std::size_t> complement;  ///< basis index in A of each quotient basis vector

  /// Coordinates of the class of v.
  fp::Vec project(fp::Vec v) const {
    const fp::Elem p = algebra.field_char();
    for (const auto& row : ideal) {
      std::size_t piv = 0;
      while (row[piv] == 0) ++piv;
      const fp::Elem c = v[piv];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = fp::sub(v[k], fp::mul(c, row[k], p), p);
    }
    fp::Vec out(complement.size());
    for (std::size_t i = 0; i < complement.size(); ++i) out[i] = v[complement[i]];
    return out;
  }
  /// A representative in A of a quotient vector.
  fp::Vec lift(const fp::Vec& q, std::size_t ambient_dim) const {
    fp::Vec v(ambient_dim, 0);
    for (std::size_t i = 0; i < complement.size(); ++i) v[complement[i]] = q[i];
    return v;
  }
};

inline QuotientAlgebra quotient(const FDAlgebra& a, fp::Mat ideal) {
  const fp::Elem p = a.field_char();
  QuotientAlgebra q;
  const auto pivots = fp::rref(ideal, p);
  q.ideal = std::move(ideal);
  std::vector<bool> is_pivot(a.dim(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!is_pivot[i]) q.complement.push_back(i);
  const std::size_t m = q.complement.size();
  q.algebra = FDAlgebra(m, p);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const fp::Vec prod = q.project(a.basis_product(q.complement[i], q.complement[j]));
      for (std::size_t k = 0; k < m; ++k)
        if (prod[k]) q.algebra.add_term(i, j, k, prod[k]);
    }
  q.algebra.set_unit(q.project(a.unit()));
  return q;
}

/// Jacobson radical as the kernel of the trace form tr(L_x L_y). Needs p > dim.
/// The result is checked to be a nilpotent two-sided ideal with semisimple
/// quotient (nondegenerate quotient trace form).
inline fp::Mat radical(const FDAlgebra& a) {
  const std::size_t n = a.dim();
  const fp::Elem p = a.field_char();
  if (p <= n) throw AlgebraError("trace-form radical needs field characteristic > dim");
  const fp::Mat j = fp::span_basis(fp::nullspace(trace_form(a), n, p), p);
  const fp::EchelonSpace js = echelon(a, j);
  for (const auto& x : j)
    for (std::size_t b = 0; b < n; ++b) {
      const fp::Vec e = a.basis_vector(b);
      if (!js.contains(a.multiply(x, e)) || !js.contains(a.multiply(e, x)))
        throw AlgebraError("trace-form kernel is not an ideal");
    }
  fp::Mat power = j;
  for (std::size_t k = 0; k <= n && !power.empty(); ++k) power = product_space(a, power, j);
  if (!power.empty()) throw AlgebraError("trace-form kernel is not nilpotent");
  const QuotientAlgebra q = quotient(a, j);
  if (fp::rank(trace_form(q.algebra), p) != q.algebra.dim())
    throw AlgebraError("quotient by the trace-form kernel is not semisimple");
  return j;
}

/// Dimensions of J, J^2, J^3, ... down to 0 (the final 0 included).
inline std::vector<std::size_t> radical_power_dims(const FDAlgebra& a) {
  const fp::Mat j = radical(a);
  std::vector<std::size_t> dims{j.size()};
  fp::Mat power = j;
  while (!power.empty()) {
    power = product_space(a, power, j);
    dims.push_back(power.size());
  }
  return dims;
}

/// Centre: elements commuting with every generator (basis when none are recorded).
inline fp::Mat center(const FDAlgebra& a) {
  const std::size_t n = a.dim();
  const fp::Elem p = a.field_char();
  fp::Mat gens = a.generators();
  if (gens.empty())
    for (std::size_t i = 0; i < n; ++i) gens.push_back(a.basis_vector(i));
  // columns: x e_j - e_j x for basis x = e_i; rows: coordinates k per generator
  fp::Mat constraints;
  for (const auto& g : gens) {
    fp::Mat block(n, fp::Vec(n, 0));  // block[k][i] = (e_i g - g e_i)_k
    for (std::size_t i = 0; i < n; ++i) {
      const fp::Vec e = a.basis_vector(i);
      const fp::Vec l = a.multiply(e, g), r = a.multiply(g, e);
      for (std::size_t k = 0; k < n; ++k) block[k][i] = fp::sub(l[k], r[k], p);
    }
    for (auto& row : block)
      if (!fp::is_zero(row)) constraints.push_back(std::move(row));
    constraints = fp::span_basis(std::move(constraints), p);
  }
  return fp::span_basis(fp::nullspace(constraints, n, p), p);
}

namespace skewalg_detail {

/// Minimal polynomial (monic, low degree first) of x in the algebra e A e with identity e.
inline fp::Vec minimal_polynomial(const FDAlgebra& a, const fp::Vec& e, const fp::Vec& x) {
  const fp::Elem p = a.field_char();
  fp::Mat powers{e};
  fp::Vec cur = e;
  for (;;) {
    cur = a.multiply(cur, x);
    const fp::Vec c = fp::coordinates(powers, cur, p);
    if (!c.empty() || fp::is_zero(cur)) {
      fp::Vec poly(powers.size() + 1, 0);
      for (std::size_t i = 0; i < c.size(); ++i) poly[i] = fp::neg(c[i], p);
      poly.back() = 1;
      return poly;
    }
    powers.push_back(cur);
    if (powers.size() > a.dim() + 1) throw AlgebraError("minimal polynomial degree exceeds dimension");
  }
}

inline fp::Elem eval(const fp::Vec& poly, fp::Elem x, fp::Elem p) {
  fp::Elem r = 0;
  for (std::size_t i = poly.size(); i-- > 0;) r = fp::add(fp::mul(r, x, p), poly[i], p);
  return r;
}

}  // namespace skewalg_detail

/// Primitive central idempotents.
///
/// On the commutative centre Z the Frobenius x -> x^p is F_p-linear; its
/// fixed space is spanned by the primitive central idempotents, one per
/// block. Elements of that space have split separable minimal polynomials, so
/// Lagrange interpolation on their roots splits 1 into the idempotents.
inline fp::Mat central_idempotents(const FDAlgebra& a) {
  const fp::Elem p = a.field_char();
  const fp::Mat z = center(a);
  const std::size_t m = z.size();
  // matrix of (Frobenius - identity) in Z-coordinates, column i for z_i
  fp::Mat f(m, fp::Vec(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    const fp::Vec c = fp::coordinates(z, a.power(z[i], p), p);
    if (c.empty()) throw AlgebraError("centre is not closed under p-th powers");
    for (std::size_t k = 0; k < m; ++k) f[k][i] = fp::sub(c[k], k == i ? 1 : 0, p);
  }
  fp::Mat fixed;
  for (const auto& coeffs : fp::nullspace(f, m, p)) {
    fp::Vec v(a.dim(), 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < a.dim(); ++k) v[k] = fp::add(v[k], fp::mul(coeffs[i], z[i][k], p), p);
    fixed.push_back(std::move(v));
  }
  const std::size_t blocks = fixed.size();
  fp::Mat idem{a.unit()};
  for (const auto& b : fixed) {
    if (idem.size() == blocks) break;
    fp::Mat next;
    for (const auto& e : idem) {
      const fp::Vec x = a.multiply(e, b);
      const fp::Vec poly = skewalg_detail::minimal_polynomial(a, e, x);
      std::vector<fp::Elem> roots;
      for (fp::Elem t = 0; t < p; ++t)
        if (skewalg_detail::eval(poly, t, p) == 0) roots.push_back(t);
      if (roots.size() + 1 != poly.size()) throw AlgebraError("minimal polynomial does not split into distinct roots");
      for (auto lam : roots) {
        fp::Vec f_lam = e;
        for (auto mu : roots) {
          if (mu == lam) continue;
          fp::Vec factor = x;
          const fp::Elem c = fp::inv(fp::sub(lam, mu, p), p);
          for (std::size_t k = 0; k < a.dim(); ++k)
            factor[k] = fp::mul(fp::sub(factor[k], fp::mul(mu, e[k], p), p), c, p);
          f_lam = a.multiply(f_lam, factor);
        }
        next.push_back(std::move(f_lam));
      }
    }
    idem = std::move(next);
  }
  if (idem.size() != blocks)
    throw AlgebraError("central idempotent splitting stopped at " + std::to_string(idem.size()) + " of " +
                       std::to_string(blocks) + " blocks");
  std::sort(idem.begin(), idem.end());
  return idem;
}

/// dim A e for each central idempotent e.
inline std::vector<std::size_t> block_dims(const FDAlgebra& a, const fp::Mat& idempotents) {
  std::vector<std::size_t> dims;
  for (const auto& e : idempotents) {
    fp::Mat img;
    for (std::size_t i = 0; i < a.dim(); ++i) img.push_back(a.multiply(a.basis_vector(i), e));
    dims.push_back(fp::rank(img, a.field_char()));
  }
  return dims;
}

/// Simple modules of a split algebra: one per block of A/J, of dimension
/// sqrt(dim of that block).
struct SimpleModules {
  std::size_t count = 0;
  std::vector<std::size_t> dims;
};

inline SimpleModules simple_modules(const FDAlgebra& a) {
  const QuotientAlgebra q = quotient(a, radical(a));
  const fp::Mat idem = central_idempotents(q.algebra);
  SimpleModules s;
  for (auto d : block_dims(q.algebra, idem)) {
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= d) ++r;
    if (r * r != d) throw AlgebraError("semisimple quotient is not split over F_p");
    s.dims.push_back(r);
  }
  std::sort(s.dims.begin(), s.dims.end());
  s.count = s.dims.size();
  return s;
}

/// Ext-quiver of a basic algebra whose semisimple quotient is commutative:
/// adj[eta][mu] = dim e_mu (J/J^2) e_eta for the primitive idempotents of A/J.
inline std::vector<std::vector<std::size_t>> quiver_from_idempotents(const FDAlgebra& a) {
  const fp::Elem p = a.field_char();
  const std::size_t n = a.dim();
  const fp::Mat j = radical(a);
  const QuotientAlgebra top = quotient(a, j);
  const fp::Mat idem = central_idempotents(top.algebra);
  if (idem.size() != top.algebra.dim())
    throw AlgebraError("semisimple quotient is not a product of copies of F_p");
  const fp::Mat j2 = product_space(a, j, j);
  // basis of J modulo J^2: extend J^2 by vectors of J
  fp::EchelonSpace ext = echelon(a, j2);
  fp::Mat jmod;
  for (const auto& v : j)
    if (ext.insert(v)) jmod.push_back(v);
  std::vector<fp::Vec> lifts;
  for (const auto& e : idem) lifts.push_back(top.lift(e, n));
  const std::size_t v = idem.size();
  std::vector<std::vector<std::size_t>> adj(v, std::vector<std::size_t>(v, 0));
  for (std::size_t eta = 0; eta < v; ++eta)
    for (std::size_t mu = 0; mu < v; ++mu) {
      fp::Mat img = j2;
      for (const auto& x : jmod) img.push_back(a.multiply(a.multiply(lifts[mu], x), lifts[eta]));
      adj[eta][mu] = fp::rank(img, p) - j2.size();
    }
  return adj;
}

inline FDAlgebra tensor(const FDAlgebra& x, const FDAlgebra& y) {
  if (x.field_char() != y.field_char()) throw FieldMismatch("tensor factors live over different fields");
  const fp::Elem p = x.field_char();
  const std::size_t n = x.dim(), m = y.dim();
  FDAlgebra t(n * m, p);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& s : x.product_terms(a, b))
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t d = 0; d < m; ++d)
            for (const auto& u : y.product_terms(c, d))
              t.add_term(a * m + c, b * m + d, s.k * m + u.k, fp::mul(s.v, u.v, p));
  fp::Vec unit(n * m, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < m; ++c) unit[a * m + c] = fp::mul(x.unit()[a], y.unit()[c], p);
  t.set_unit(std::move(unit));
  return t;
}

/// The one-dimensional algebra F_p.
inline FDAlgebra ground_field(fp::Elem p) {
  FDAlgebra k(1, p);
  k.add_term(0, 0, 0, 1);
  k.set_unit({1});
  return k;
}

/// Fibre of the relations alpha(k) alpha(k') = alpha(0) alpha(k+k') (k+k' <= ell)
/// and alpha(k) alpha(k') = alpha(k+k'-ell) alpha(ell) (k+k' >= ell), with
/// alpha(0) = b and alpha(ell) = c specialised to 0 or 1. Basis: 1, alpha(1..ell-1).
inline FDAlgebra build_fiber_algebra(std::int64_t ell, bool b_zero, bool c_zero, fp::Elem p) {
  if (ell < 2) throw AlgebraError("ell must be at least 2");
  const auto l = static_cast<std::size_t>(ell);
  const fp::Elem b = b_zero ? 0 : 1, c = c_zero ? 0 : 1;
  FDAlgebra a(l, p);
  for (std::size_t k = 0; k < l; ++k) {
    a.add_term(0, k, k, 1);
    if (k) a.add_term(k, 0, k, 1);
  }
  for (std::size_t k = 1; k < l; ++k)
    for (std::size_t q = 1; q < l; ++q) {
      if (k + q < l)
        a.add_term(k, q, k + q, b);
      else if (k + q == l)
        a.add_term(k, q, 0, fp::mul(b, c, p));
      else
        a.add_term(k, q, k + q - l, c);
    }
  a.set_unit(a.basis_vector(0));
  validate_algebra(a);
  return a;
}

inline FDAlgebra build_fiber_algebra(std::int64_t ell, bool b_zero, bool c_zero) {
  return build_fiber_algebra(ell, b_zero, c_zero, make_field_char(ell, ell));
}

/// Reduced Borel of sl_2: basis E^a K^b (index a * ell + b), K E = zeta^2 E K,
/// K^ell = 1, E^ell = 0, with zeta a primitive ell-th root of unity in F_p.
inline FDAlgebra build_borel_sl2(std::int64_t ell, fp::Elem p) {
  if (ell < 3 || ell % 2 == 0) throw AlgebraError("build_borel_sl2 needs odd ell >= 3");
  const auto l = static_cast<std::size_t>(ell);
  const fp::Elem zeta = fp::root_of_unity(ell, p);
  FDAlgebra a(l * l, p);
  for (std::size_t ea = 0; ea < l; ++ea)
    for (std::size_t kb = 0; kb < l; ++kb)
      for (std::size_t ec = 0; ec < l; ++ec)
        for (std::size_t kd = 0; kd < l; ++kd) {
          if (ea + ec >= l) continue;
          const fp::Elem coeff = fp::pow(zeta, 2 * kb * ec % l, p);
          a.add_term(ea * l + kb, ec * l + kd, (ea + ec) * l + (kb + kd) % l, coeff);
        }
  a.set_unit(a.basis_vector(0));
  a.set_generators({a.basis_vector(l), a.basis_vector(1)});  // E, K
  validate_algebra(a);
  return a;
}

inline FDAlgebra build_borel_sl2(std::int64_t ell) {
  return build_borel_sl2(ell, make_field_char(ell, ell * ell));
}

/// (Z/ell)^k acting on an algebra; generator i acts by matrices[i]
/// (column j = image of e_j).
struct AbelianAction {
  std::int64_t ell = 2;
  std::vector<fp::Mat> matrices;

  std::size_t rank() const noexcept { return matrices.size(); }
  std::size_t group_order() const {
    std::size_t o = 1;
    for (std::size_t i = 0; i < matrices.size(); ++i) o *= static_cast<std::size_t>(ell);
    return o;
  }
};

/// Group elements of (Z/ell)^k in lexicographic order.
inline std::vector<IntVec> group_elements(std::int64_t ell, std::size_t k) {
  return quiver_detail::all_elements(std::vector<std::int64_t>(k, ell));
}

/// Checks that each matrix is an automorphism of order dividing ell and that they commute.
inline void validate_action(const FDAlgebra& s, const AbelianAction& act) {
  const fp::Elem p = s.field_char();
  const std::size_t n = s.dim();
  for (const auto& m : act.matrices) {
    if (m.size() != n) throw AlgebraError("action matrix has wrong size");
    fp::Mat pw = fp::identity(n);
    for (std::int64_t k = 0; k < act.ell; ++k) pw = fp::mat_mul(pw, m, p);
    if (pw != fp::identity(n)) throw AlgebraError("action matrix order does not divide ell");
    if (fp::mat_vec(m, s.unit(), p) != s.unit()) throw AlgebraError("action does not fix the unit");
    std::vector<fp::Vec> img(n);
    for (std::size_t j = 0; j < n; ++j) img[j] = fp::mat_vec(m, s.basis_vector(j), p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (fp::mat_vec(m, s.basis_product(i, j), p) != s.multiply(img[i], img[j]))
          throw AlgebraError("action matrix is not an algebra automorphism");
  }
  for (std::size_t a = 0; a < act.rank(); ++a)
    for (std::size_t b = a + 1; b < act.rank(); ++b)
      if (fp::mat_mul(act.matrices[a], act.matrices[b], p) != fp::mat_mul(act.matrices[b], act.matrices[a], p))
        throw AlgebraError("action matrices do not commute");
}

/// Skew group algebra S * G with g s = tau_g(s) g. Basis (a, g) has index
/// a * |G| + (lexicographic index of g).
inline FDAlgebra skew_product(const FDAlgebra& s, const AbelianAction& act) {
  validate_action(s, act);
  const fp::Elem p = s.field_char();
  const std::size_t n = s.dim(), k = act.rank();
  const auto elems = group_elements(act.ell, k);
  const std::size_t order = elems.size();
  std::vector<fp::Mat> tau;
  for (const auto& g : elems) {
    fp::Mat m = fp::identity(n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::int64_t t = 0; t < g[i]; ++t) m = fp::mat_mul(m, act.matrices[i], p);
    tau.push_back(std::move(m));
  }
  auto index = [&](const IntVec& g) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * static_cast<std::size_t>(act.ell) + static_cast<std::size_t>(g[i]);
    return idx;
  };
  std::vector<std::vector<std::size_t>> sum(order, std::vector<std::size_t>(order));
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h) {
      IntVec x(k);
      for (std::size_t i = 0; i < k; ++i) x[i] = (elems[g][i] + elems[h][i]) % act.ell;
      sum[g][h] = index(x);
    }
  FDAlgebra t(n * order, p);
  // (e_a g)(e_b h) = sum_c tau_g[c][b] e_a e_c (g + h)
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const fp::Elem coeff = tau[g][c][b];
        if (coeff == 0) continue;
        for (std::size_t a = 0; a < n; ++a)
          for (const auto& term : s.product_terms(a, c))
            for (std::size_t h = 0; h < order; ++h)
              t.add_term(a * order + g, b * order + h, term.k * order + sum[g][h], fp::mul(coeff, term.v, p));
      }
  fp::Vec unit(n * order, 0);
  for (std::size_t a = 0; a < n; ++a) unit[a * order] = s.unit()[a];
  t.set_unit(unit);
  fp::Mat gens;
  const fp::Mat sgens = s.generators();
  for (std::size_t a = 0; a < (sgens.empty() ? n : sgens.size()); ++a) {
    const fp::Vec x = sgens.empty() ? s.basis_vector(a) : sgens[a];
    fp::Vec v(n * order, 0);
    for (std::size_t c = 0; c < n; ++c) v[c * order] = x[c];
    gens.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < k; ++i) {
    IntVec g(k, 0);
    g[i] = 1;
    fp::Vec v(n * order, 0);
    for (std::size_t c = 0; c < n; ++c) v[c * order + index(g)] = s.unit()[c];
    gens.push_back(std::move(v));
  }
  t.set_generators(std::move(gens));
  return t;
}

/// Blocks and quiver of S1 * G for a scalar local S1, read off from the
/// characters of G on J/J^2.
struct BlockReport {
  std::size_t block_count = 0;
  std::vector<std::size_t> block_dims;
  std::map<IntVec, std::size_t> char_multiplicities;  ///< character -> m_chi (nonzero only)
  std::vector<IntVec> y_subgroup;  ///< characters generated by those with m_chi > 0
  std::vector<IntVec> d_subgroup;  ///< group elements killed by every character in Y
  CayleyGraph quiver;              ///< on the character group X(G)
};

inline BlockReport blquiv_report(const FDAlgebra& s1, const AbelianAction& act) {
  validate_action(s1, act);
  const fp::Elem p = s1.field_char();
  const std::size_t n = s1.dim(), k = act.rank();
  const fp::Mat j = radical(s1);
  if (j.size() + 1 != n) throw NotLocal("algebra is not scalar local (radical has codimension " +
                                        std::to_string(n - j.size()) + ")");
  const fp::Elem zeta = fp::root_of_unity(act.ell, p);
  const fp::Mat j2 = product_space(s1, j, j);
  fp::EchelonSpace ext = echelon(s1, j2);
  fp::Mat jmod;
  for (const auto& v : j)
    if (ext.insert(v)) jmod.push_back(v);
  const std::size_t q = jmod.size();
  // basis of J used for coordinates: J^2 basis followed by the complement
  fp::Mat jbasis = j2;
  jbasis.insert(jbasis.end(), jmod.begin(), jmod.end());
  std::vector<fp::Mat> on_top;  // action on J/J^2, column c = image of jmod[c]
  for (const auto& m : act.matrices) {
    fp::Mat a(q, fp::Vec(q, 0));
    for (std::size_t c = 0; c < q; ++c) {
      const fp::Vec coords = fp::coordinates(jbasis, fp::mat_vec(m, jmod[c], p), p);
      if (coords.empty()) throw AlgebraError("action does not preserve the radical");
      for (std::size_t r = 0; r < q; ++r) a[r][c] = coords[j2.size() + r];
    }
    on_top.push_back(std::move(a));
  }
  BlockReport rep;
  const auto chars = group_elements(act.ell, k);
  std::size_t total = 0;
  for (const auto& chi : chars) {
    fp::Mat stacked;
    for (std::size_t i = 0; i < k; ++i) {
      const fp::Elem ev = fp::pow(zeta, static_cast<std::uint64_t>(chi[i]), p);
      for (std::size_t r = 0; r < q; ++r) {
        fp::Vec row = on_top[i][r];
        row[r] = fp::sub(row[r], ev, p);
        stacked.push_back(std::move(row));
      }
    }
    const std::size_t m = q - fp::rank(stacked, p);
    if (m) rep.char_multiplicities[chi] = m;
    total += m;
  }
  if (total != q) throw AlgebraError("group action on J/J^2 is not diagonalisable over F_p");
  // Y: closure of the support under addition
  std::set<IntVec> y{IntVec(k, 0)};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [chi, m] : rep.char_multiplicities)
      for (const auto& v : std::vector<IntVec>(y.begin(), y.end())) {
        IntVec w(k);
        for (std::size_t i = 0; i < k; ++i) w[i] = (v[i] + chi[i]) % act.ell;
        grew = y.insert(w).second || grew;
      }
  }
  rep.y_subgroup.assign(y.begin(), y.end());
  for (const auto& g : chars) {
    bool killed = true;
    for (const auto& [chi, m] : rep.char_multiplicities) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < k; ++i) s += chi[i] * g[i];
      if (s % act.ell != 0) killed = false;
    }
    if (killed) rep.d_subgroup.push_back(g);
  }
  rep.block_count = rep.d_subgroup.size();
  rep.block_dims.assign(rep.block_count, n * rep.y_subgroup.size());
  std::vector<CayleyGenerator> gens;
  for (const auto& [chi, m] : rep.char_multiplicities) gens.push_back({chi, m});
  rep.quiver = cayley_graph(std::vector<std::int64_t>(k, act.ell), gens);
  return rep;
}

/// Local algebra spanned by monomials (commutative: exponent vectors closed
/// under division; otherwise words closed under taking factors), with
/// products outside the set equal to zero.
struct MonomialAlgebra {
  FDAlgebra algebra;
  std::size_t variables = 0;
  std::vector<std::vector<int>> degree;  ///< degree[basis][variable]
  std::vector<std::string> labels;
};

namespace skewalg_detail {

inline std::string monomial_label(const std::vector<int>& letters_or_exps, bool commutative) {
  std::string s;
  if (commutative) {
    for (std::size_t v = 0; v < letters_or_exps.size(); ++v)
      if (letters_or_exps[v]) s += "x" + std::to_string(v + 1) + (letters_or_exps[v] > 1 ? "^" + std::to_string(letters_or_exps[v]) : "");
  } else {
    for (int c : letters_or_exps) s += "x" + std::to_string(c + 1);
  }
  return s.empty() ? "1" : s;
}

}  // namespace skewalg_detail

/// Random local monomial algebra of dimension at most max_dim on 1..3 variables.
template <class Rng>
MonomialAlgebra random_monomial_algebra(Rng& rng, fp::Elem p, std::size_t max_dim, bool commutative) {
  std::uniform_int_distribution<int> nvars_dist(1, 3);
  const auto m = static_cast<std::size_t>(nvars_dist(rng));
  std::uniform_int_distribution<std::size_t> target_dist(m + 1, std::max(m + 1, max_dim));
  const std::size_t target = target_dist(rng);
  // monomials: commutative -> exponent vectors; otherwise -> words
  std::vector<std::vector<int>> monos{commutative ? std::vector<int>(m, 0) : std::vector<int>{}};
  std::set<std::vector<int>> in(monos.begin(), monos.end());
  for (std::size_t v = 0; v < m; ++v) {
    std::vector<int> x;
    if (commutative) {
      x.assign(m, 0);
      x[v] = 1;
    } else {
      x = {static_cast<int>(v)};
    }
    monos.push_back(x);
    in.insert(x);
  }
  std::uniform_int_distribution<std::size_t> var_dist(0, m - 1);
  for (std::size_t attempts = 0; monos.size() < target && attempts < 500; ++attempts) {
    std::uniform_int_distribution<std::size_t> pick(1, monos.size() - 1);
    const auto& base = monos[pick(rng)];
    const std::size_t v = var_dist(rng);
    std::vector<int> cand = base;
    bool ok = true;
    if (commutative) {
      cand[v] += 1;
      for (std::size_t i = 0; i < m && ok; ++i) {
        if (cand[i] == 0) continue;
        auto parent = cand;
        parent[i] -= 1;
        ok = in.count(parent) > 0;
      }
    } else {
      if (rng() & 1)
        cand.push_back(static_cast<int>(v));
      else
        cand.insert(cand.begin(), static_cast<int>(v));
      ok = in.count(std::vector<int>(cand.begin() + 1, cand.end())) > 0 &&
           in.count(std::vector<int>(cand.begin(), cand.end() - 1)) > 0;
    }
    if (ok && in.insert(cand).second) monos.push_back(cand);
  }
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  MonomialAlgebra out;
  out.variables = m;
  out.algebra = FDAlgebra(monos.size(), p);
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      std::vector<int> prod;
      if (commutative) {
        prod.resize(m);
        for (std::size_t v = 0; v < m; ++v) prod[v] = monos[i][v] + monos[j][v];
      } else {
        prod = monos[i];
        prod.insert(prod.end(), monos[j].begin(), monos[j].end());
      }
      const auto it = index.find(prod);
      if (it != index.end()) out.algebra.add_term(i, j, it->second, 1);
    }
  out.algebra.set_unit(out.algebra.basis_vector(0));
  fp::Mat gens;
  for (std::size_t v = 0; v < m; ++v) gens.push_back(out.algebra.basis_vector(v + 1));
  out.algebra.set_generators(std::move(gens));
  for (const auto& mono : monos) {
    std::vector<int> deg(m, 0);
    if (commutative)
      deg = mono;
    else
      for (int c : mono) ++deg[static_cast<std::size_t>(c)];
    out.degree.push_back(std::move(deg));
    out.labels.push_back(skewalg_detail::monomial_label(mono, commutative));
  }
  validate_algebra(out.algebra);
  return out;
}

/// Diagonal action: variable v scales by zeta^{chars[v][i]} under generator i.
inline AbelianAction diagonal_character_action(const MonomialAlgebra& mon, std::int64_t ell,
                                               const std::vector<IntVec>& chars) {
  const fp::Elem p = mon.algebra.field_char();
  const fp::Elem zeta = fp::root_of_unity(ell, p);
  if (chars.size() != mon.variables) throw AlgebraError("need one character per variable");
  const std::size_t k = chars.empty() ? 0 : chars.front().size();
  AbelianAction act;
  act.ell = ell;
  for (std::size_t i = 0; i < k; ++i) {
    fp::Mat m(mon.algebra.dim(), fp::Vec(mon.algebra.dim(), 0));
    for (std::size_t b = 0; b < mon.algebra.dim(); ++b) {
      std::int64_t e = 0;
      for (std::size_t v = 0; v < mon.variables; ++v) e += mon.degree[b][v] * chars[v][i];
      m[b][b] = fp::pow(zeta, static_cast<std::uint64_t>(((e % ell) + ell) % ell), p);
    }
    act.matrices.push_back(std::move(m));
  }
  return act;
}

}  // namespace qstrata
