#pragma once

// Weyl group engine. Elements are exact integer matrices acting on the weight
// lattice (fundamental-weight coordinates) and on the root lattice
// (simple-root coordinates); both are carried so that sign tests on roots
// never need a matrix inverse. Simple indices are 1-based everywhere in the
// public API, matching word syntax such as "1,2,1".

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "intmat.hpp"
#include "rootsys.hpp"

namespace qstrata {

using WeylWord = std::vector<int>;

struct WeylContext {
  CartanData cd;
  std::vector<IntMatrix> weight_reflections;  // s_i on P, varpi-coordinates
  std::vector<IntMatrix> root_reflections;    // s_i on Q, alpha-coordinates
};

using WeylGroup = std::shared_ptr<const WeylContext>;

inline WeylGroup make_weyl(const CartanData& cd) {
  auto ctx = std::make_shared<WeylContext>();
  ctx->cd = cd;
  const std::size_t r = cd.r;
  for (std::size_t i = 0; i < r; ++i) {
    // s_i(x) = x - x_i * (column i of a)   on varpi-coordinates
    IntMatrix sw = IntMatrix::identity(r);
    for (std::size_t j = 0; j < r; ++j) sw(j, i) -= cd.a(j, i);
    // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i   on alpha-coordinates
    IntMatrix sa = IntMatrix::identity(r);
    for (std::size_t j = 0; j < r; ++j) sa(i, j) -= cd.a(i, j);
    ctx->weight_reflections.push_back(std::move(sw));
    ctx->root_reflections.push_back(std::move(sa));
  }
  return ctx;
}

inline WeylGroup make_weyl(const std::string& type_string) { return make_weyl(cartan_data(type_string)); }

class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(WeylGroup g)
      : group_(std::move(g)),
        weight_(IntMatrix::identity(group_->cd.r)),
        root_(IntMatrix::identity(group_->cd.r)) {}
  WeylElement(WeylGroup g, IntMatrix weight, IntMatrix root)
      : group_(std::move(g)), weight_(std::move(weight)), root_(std::move(root)) {}

  const WeylGroup& group() const noexcept { return group_; }
  const CartanData& cartan() const noexcept { return group_->cd; }
  std::size_t rank() const noexcept { return group_->cd.r; }

  /// Action on P in varpi-coordinates (column j is the image of varpi_j).
  const IntMatrix& matrix() const noexcept { return weight_; }
  /// Action on Q in alpha-coordinates.
  const IntMatrix& root_matrix() const noexcept { return root_; }

  bool is_identity() const { return weight_.is_identity(); }

  friend WeylElement operator*(const WeylElement& x, const WeylElement& y) {
    return WeylElement(x.group_, x.weight_ * y.weight_, x.root_ * y.root_);
  }

  /// Right multiplication by s_i (1-based).
  WeylElement times_simple(int i) const {
    const auto k = static_cast<std::size_t>(i - 1);
    return WeylElement(group_, weight_ * group_->weight_reflections[k],
                       root_ * group_->root_reflections[k]);
  }

  /// Inverse through the invariant pairing (varpi_i, alpha_j) = delta_ij d_i:
  /// W_P^T D W_Q = D, hence W_P^{-1} = D^{-1} W_Q^T D and W_Q^{-1} = D^{-1} W_P^T D.
  WeylElement inverse() const {
    const auto& d = group_->cd.d;
    const std::size_t r = rank();
    IntMatrix wi(r, r), ri(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        wi(i, j) = root_(j, i) * d[j] / d[i];
        ri(i, j) = weight_(j, i) * d[j] / d[i];
      }
    return WeylElement(group_, std::move(wi), std::move(ri));
  }

  /// Image of a root given in alpha-coordinates.
  IntVec act_on_root(const IntVec& beta) const { return root_ * beta; }
  /// Image of a weight given in varpi-coordinates.
  IntVec act_on_weight(const IntVec& lambda) const { return weight_ * lambda; }

  friend bool operator==(const WeylElement& x, const WeylElement& y) { return x.weight_ == y.weight_; }

 private:
  WeylGroup group_;
  IntMatrix weight_;
  IntMatrix root_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept { return w.matrix().hash(); }
};

inline void check_letter(const WeylGroup& g, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > g->cd.r)
    throw IndexOutOfRange("simple index " + std::to_string(i) + " outside 1.." +
                          std::to_string(g->cd.r));
}

inline WeylElement identity_element(const WeylGroup& g) { return WeylElement(g); }

inline WeylElement simple_reflection(const WeylGroup& g, int i) {
  check_letter(g, i);
  return identity_element(g).times_simple(i);
}

/// Product s_{i_1} s_{i_2} ... in word order.
inline WeylElement from_word(const WeylGroup& g, const WeylWord& word) {
  for (int i : word) check_letter(g, i);
  WeylElement w = identity_element(g);
  for (int i : word) w = w.times_simple(i);
  return w;
}

namespace detail {
inline std::int64_t vec_height(const IntVec& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}
/// w(alpha_i) < 0, i.e. s_i is a right descent of w.
inline bool is_right_descent(const WeylElement& w, int i) {
  const auto k = static_cast<std::size_t>(i - 1);
  std::int64_t h = 0;
  for (std::size_t j = 0; j < w.rank(); ++j) h += w.root_matrix()(j, k);
  return h < 0;
}
}  // namespace detail

/// Number of positive roots sent to negative roots.
inline std::size_t length(const WeylElement& w) {
  std::size_t n = 0;
  for (const auto& beta : w.cartan().pos_roots)
    if (detail::vec_height(w.act_on_root(beta)) < 0) ++n;
  return n;
}

inline std::vector<int> right_descents(const WeylElement& w) {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(w.rank()); ++i)
    if (detail::is_right_descent(w, i)) out.push_back(i);
  return out;
}

/// Deterministic reduced word: strip the smallest right descent repeatedly.
inline WeylWord reduced_word(const WeylElement& w) {
  WeylWord rev;
  WeylElement cur = w;
  const int r = static_cast<int>(w.rank());
  while (!cur.is_identity()) {
    int i = 1;
    while (i <= r && !detail::is_right_descent(cur, i)) ++i;
    rev.push_back(i);
    cur = cur.times_simple(i);
  }
  return WeylWord(rev.rbegin(), rev.rend());
}

inline WeylElement longest_element(const WeylGroup& g) {
  WeylElement w = identity_element(g);
  const int r = static_cast<int>(g->cd.r);
  for (;;) {
    int i = 1;
    while (i <= r && detail::is_right_descent(w, i)) ++i;
    if (i > r) return w;
    w = w.times_simple(i);
  }
}

/// Codimension of the fixed space of w on Q (x) P.
inline std::size_t rank_s(const WeylElement& w) {
  return rational_rank(w.matrix() - IntMatrix::identity(w.rank()));
}

/// Bruhat order by the lifting property, peeling right descents of w.
inline bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  if (length(u) > length(w)) return false;
  WeylElement x = u, y = w;
  const int r = static_cast<int>(w.rank());
  while (!y.is_identity()) {
    int i = 1;
    while (i <= r && !detail::is_right_descent(y, i)) ++i;
    if (detail::is_right_descent(x, i)) x = x.times_simple(i);
    y = y.times_simple(i);
  }
  return x.is_identity();
}

inline std::int64_t order(const WeylElement& w) {
  std::int64_t k = 1;
  WeylElement p = w;
  while (!p.is_identity()) {
    p = p * w;
    ++k;
  }
  return k;
}

/// w(varpi_i) = varpi_i, i 1-based.
inline bool stabilizes_weight(const WeylElement& w, int i) {
  check_letter(w.group(), i);
  const auto k = static_cast<std::size_t>(i - 1);
  for (std::size_t j = 0; j < w.rank(); ++j)
    if (w.matrix()(j, k) != (j == k ? 1 : 0)) return false;
  return true;
}

/// { i : w(varpi_i) = varpi_i }, ascending, 1-based.
inline std::vector<int> stabilized_fundamentals(const WeylElement& w) {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(w.rank()); ++i)
    if (stabilizes_weight(w, i)) out.push_back(i);
  return out;
}

inline bool is_reduced(const WeylGroup& g, const WeylWord& word) {
  return length(from_word(g, word)) == word.size();
}

inline void require_reduced(const WeylGroup& g, const WeylWord& word) {
  if (!is_reduced(g, word)) throw NotReduced("word is not reduced");
}

/// Set of letters appearing in a word, ascending.
inline std::vector<int> letters(const WeylWord& word) {
  std::set<int> s(word.begin(), word.end());
  return {s.begin(), s.end()};
}

struct RootSequence {
  std::vector<IntVec> betas;  ///< alpha-coordinates
};

/// beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}) for a reduced word.
inline RootSequence root_sequence(const WeylGroup& g, const WeylWord& word) {
  require_reduced(g, word);
  RootSequence seq;
  WeylElement prefix = identity_element(g);
  for (int i : word) {
    IntVec e(g->cd.r, 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    seq.betas.push_back(prefix.act_on_root(e));
    prefix = prefix.times_simple(i);
  }
  return seq;
}

constexpr std::size_t kDefaultGroupCap = 1000000;

/// All elements, each once, ordered by (length, reduced word).
inline std::vector<WeylElement> enumerate_group(const WeylGroup& g, std::size_t cap = kDefaultGroupCap) {
  std::unordered_map<IntMatrix, std::size_t> seen;
  std::vector<WeylElement> out{identity_element(g)};
  seen.emplace(out.front().matrix(), 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 1; i <= static_cast<int>(g->cd.r); ++i) {
      WeylElement next = out[head].times_simple(i);
      if (seen.emplace(next.matrix(), out.size()).second) {
        if (out.size() >= cap)
          throw CapExceeded("Weyl group of " + g->cd.cartan_type.label() + " exceeds cap " +
                            std::to_string(cap));
        out.push_back(std::move(next));
      }
    }
  }
  std::vector<std::pair<std::pair<std::size_t, WeylWord>, std::size_t>> keys;
  keys.reserve(out.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    WeylWord rw = reduced_word(out[k]);
    keys.push_back({{rw.size(), std::move(rw)}, k});
  }
  std::sort(keys.begin(), keys.end());
  std::vector<WeylElement> sorted;
  sorted.reserve(out.size());
  for (auto& k : keys) sorted.push_back(std::move(out[k.second]));
  return sorted;
}

/// Every reduced word of w (exponential; meant for small ranks).
inline std::vector<WeylWord> all_reduced_words(const WeylElement& w) {
  if (w.is_identity()) return {WeylWord{}};
  std::vector<WeylWord> out;
  for (int i : right_descents(w)) {
    for (auto& prefix : all_reduced_words(w.times_simple(i))) {
      prefix.push_back(i);
      out.push_back(std::move(prefix));
    }
  }
  return out;
}

/// "1,2,1"; the identity prints as "e".
inline std::string format_word(const WeylWord& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(word[k]);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const WeylElement& w) {
  return os << w.cartan().cartan_type.label() << "[" << format_word(reduced_word(w)) << "]";
}

/// Parses "", "e", "1,2,1", "w0", "w0*1,2" (left-to-right product w0 s1 s2).
inline WeylElement parse_word_expr(const WeylGroup& g, const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  WeylElement result = identity_element(g);
  skip_ws();
  if (pos == text.size()) return result;
  bool expect_factor = true;
  while (pos < text.size()) {
    skip_ws();
    if (!expect_factor) {
      if (text[pos] != '*') throw ParseError("expected '*' between factors", pos);
      ++pos;
      skip_ws();
      expect_factor = true;
      continue;
    }
    if (text.compare(pos, 2, "w0") == 0 || text.compare(pos, 2, "W0") == 0) {
      result = result * longest_element(g);
      pos += 2;
    } else if ((text[pos] == 'e' || text[pos] == 'E') &&
               (pos + 1 == text.size() || text[pos + 1] == '*' ||
                std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      for (;;) {
        const std::size_t start = pos;
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = v * 10 + (text[pos] - '0');
          if (v > 100000) throw ParseError("index too large", start);
          ++pos;
        }
        if (pos == start) throw ParseError("expected a simple index", pos);
        if (v < 1 || static_cast<std::size_t>(v) > g->cd.r)
          throw ParseError("simple index " + std::to_string(v) + " outside 1.." +
                               std::to_string(g->cd.r),
                           start);
        result = result.times_simple(v);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          skip_ws();
          continue;
        }
        break;
      }
    } else {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    }
    expect_factor = false;
    skip_ws();
  }
  if (expect_factor) throw ParseError("dangling '*'", text.size());
  return result;
}

}  // namespace qstrata
