#pragma once

// Whole-group enumeration: the table of invariants over W x W, the
// componentwise Bruhat poset of strata, and cross-module consistency sweeps.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "invariants.hpp"
#include "lattice.hpp"
#include "weyl.hpp"

namespace qstrata {

/// Largest |W| for which full W x W work is allowed by default (F4).
constexpr std::size_t kDefaultTableCap = 1152;

/// Table cap from QSTRATA_CAP when set to a positive integer.
inline std::size_t default_table_cap() {
  if (const char* env = std::getenv("QSTRATA_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultTableCap;
}

/// Elements ordered by (length, reduced word), refusing groups above the cap.
inline std::vector<WeylElement> ordered_elements(const WeylGroup& g, std::size_t cap) {
  return enumerate_group(g, cap);
}

struct StratumRow {
  WeylElement w1, w2;
  std::string w1_word, w2_word;
  StratumInvariants inv;
};

struct StratumTable {
  std::string cartan_type;
  std::int64_t ell = 0;
  std::vector<StratumRow> rows;
};

inline StratumRow make_row(const WeylElement& w1, const WeylElement& w2, std::int64_t ell) {
  return {w1, w2, format_word(reduced_word(w1)), format_word(reduced_word(w2)),
          stratum_invariants(make_stratum_pair(w1, w2, ell))};
}

/// Calls `sink` once per (w1, w2) in table order without keeping the rows.
inline void stream_table(const WeylGroup& g, std::int64_t ell, const std::function<void(const StratumRow&)>& sink,
                         std::size_t cap = default_table_cap()) {
  require_good_ell(g->cd, ell);
  const auto elems = ordered_elements(g, cap);
  for (const auto& w1 : elems)
    for (const auto& w2 : elems) sink(make_row(w1, w2, ell));
}

inline StratumTable build_table(const WeylGroup& g, std::int64_t ell, std::size_t cap = default_table_cap()) {
  StratumTable t;
  t.cartan_type = g->cd.cartan_type.label();
  t.ell = ell;
  stream_table(g, ell, [&](const StratumRow& row) { t.rows.push_back(row); }, cap);
  return t;
}

inline const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols{"type",       "ell",         "w1_word",       "w2_word",  "len1",
                                             "len2",       "s_twist",     "azumaya",       "rep_type", "simples_exp",
                                             "simple_dim_exp", "blocks_exp", "per_block_exp", "frakS"};
  return cols;
}

namespace strata_detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace strata_detail

/// frakS as "1;3" (empty for the empty set).
inline std::string format_index_set(const std::vector<int>& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ';';
    out += std::to_string(s[k]);
  }
  return out;
}

inline void write_csv_header(std::ostream& os) {
  const auto& cols = csv_columns();
  for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << cols[k];
  os << '\n';
}

/// One CSV record; block fields are empty when ell divides into ord(twist).
inline void write_csv_row(std::ostream& os, const std::string& type, const StratumRow& row) {
  using strata_detail::csv_field;
  const auto& s = row.inv;
  os << type << ',' << s.ell << ',' << csv_field(row.w1_word) << ',' << csv_field(row.w2_word) << ',' << s.len1
     << ',' << s.len2 << ',' << s.s_twist << ',' << (s.is_azumaya ? "true" : "false") << ','
     << rep_type_name(s.rep_type) << ',' << s.simple_count_exp << ',' << s.simple_dim_exp << ',';
  if (s.block_count_exp) os << *s.block_count_exp;
  os << ',';
  if (s.simples_per_block_exp) os << *s.simples_per_block_exp;
  os << ',' << csv_field(format_index_set(s.frak_s)) << '\n';
}

inline std::string to_csv(const StratumTable& t) {
  std::ostringstream os;
  write_csv_header(os);
  for (const auto& row : t.rows) write_csv_row(os, t.cartan_type, row);
  return os.str();
}

/// Strata ordered componentwise by Bruhat order. Node (i, j) has index
/// i * |W| + j where i, j index `elements`.
struct DegenerationPoset {
  std::string cartan_type;
  std::vector<WeylElement> elements;
  std::vector<std::vector<std::size_t>> element_covers;  ///< element_covers[u] = elements covering u
  std::vector<std::pair<std::size_t, std::size_t>> covers;  ///< (lower node, upper node)

  std::size_t node_count() const { return elements.size() * elements.size(); }
  std::size_t node(std::size_t i, std::size_t j) const { return i * elements.size() + j; }
  std::pair<std::size_t, std::size_t> components(std::size_t n) const {
    return {n / elements.size(), n % elements.size()};
  }
};

/// Bruhat covers u < u t with t a reflection and length up by one.
inline std::vector<std::vector<std::size_t>> bruhat_covers(const std::vector<WeylElement>& elems) {
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> index;
  for (std::size_t k = 0; k < elems.size(); ++k) index.emplace(elems[k], k);
  std::vector<WeylElement> reflections;
  {
    std::unordered_map<WeylElement, bool, WeylElementHash> seen;
    const auto& g = elems.front().group();
    for (const auto& w : elems)
      for (int i = 1; i <= static_cast<int>(g->cd.r); ++i) {
        WeylElement t = w.times_simple(i) * w.inverse();
        if (seen.emplace(t, true).second) reflections.push_back(std::move(t));
      }
  }
  std::vector<std::size_t> len(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) len[k] = length(elems[k]);
  std::vector<std::vector<std::size_t>> up(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& t : reflections) {
      const std::size_t j = index.at(elems[k] * t);
      if (len[j] == len[k] + 1) up[k].push_back(j);
    }
    std::sort(up[k].begin(), up[k].end());
  }
  return up;
}

inline DegenerationPoset build_poset(const WeylGroup& g, std::size_t cap = default_table_cap()) {
  DegenerationPoset p;
  p.cartan_type = g->cd.cartan_type.label();
  p.elements = ordered_elements(g, cap);
  p.element_covers = bruhat_covers(p.elements);
  const std::size_t n = p.elements.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (auto i2 : p.element_covers[i]) p.covers.push_back({p.node(i, j), p.node(i2, j)});
      for (auto j2 : p.element_covers[j]) p.covers.push_back({p.node(i, j), p.node(i, j2)});
    }
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

inline std::string node_label(const DegenerationPoset& p, std::size_t n) {
  const auto [i, j] = p.components(n);
  return "(" + format_word(reduced_word(p.elements[i])) + " | " + format_word(reduced_word(p.elements[j])) + ")";
}

/// Hasse diagram in DOT, arrows from each stratum to the strata covering it.
inline std::string poset_to_dot(const DegenerationPoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n";
  for (std::size_t n = 0; n < p.node_count(); ++n) os << "  n" << n << " [label=\"" << node_label(p, n) << "\"];\n";
  for (const auto& [a, b] : p.covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;  ///< instances without the data the property needs
  std::string counterexample;
};

struct SweepReport {
  std::string cartan_type;
  std::int64_t ell = 0;
  std::vector<PropertyResult> properties;
  bool all_passed() const {
    for (const auto& p : properties)
      if (!p.passed) return false;
    return true;
  }
};

/// Cross-module checks over every stratum pair of the group at ell.
inline SweepReport consistency_sweep(const WeylGroup& g, std::int64_t ell, std::size_t cap = default_table_cap()) {
  const StratumTable table = build_table(g, ell, cap);
  const DegenerationPoset poset = build_poset(g, cap);
  const auto& elems = poset.elements;
  const std::size_t n = elems.size();
  const std::size_t r = g->cd.r;
  SweepReport rep;
  rep.cartan_type = table.cartan_type;
  rep.ell = ell;
  auto fail = [](PropertyResult& pr, std::string why) {
    if (pr.passed) pr.counterexample = std::move(why);
    pr.passed = false;
  };
  auto pair_label = [&](std::size_t node) { return node_label(poset, node); };

  PropertyResult ranks{"poset covers raise len1+len2 by one", true, 0, 0, {}};
  for (const auto& [a, b] : poset.covers) {
    ++ranks.checked;
    const auto& ra = table.rows[a].inv;
    const auto& rb = table.rows[b].inv;
    if (ra.len1 + ra.len2 + 1 != rb.len1 + rb.len2) fail(ranks, pair_label(a) + " < " + pair_label(b));
  }
  {
    // unique minimum and maximum: every non-bottom node is covered from below, every non-top covers upward
    std::vector<bool> has_up(poset.node_count(), false), has_down(poset.node_count(), false);
    for (const auto& [a, b] : poset.covers) has_up[a] = has_down[b] = true;
    std::size_t minima = 0, maxima = 0;
    for (std::size_t k = 0; k < poset.node_count(); ++k) {
      minima += !has_down[k];
      maxima += !has_up[k];
    }
    ++ranks.checked;
    if (minima != 1 || maxima != 1 || has_down[0] || has_up[poset.node_count() - 1])
      fail(ranks, "poset does not have (e,e) and (w0,w0) as unique extremes");
  }
  rep.properties.push_back(ranks);

  PropertyResult mono{"rep type monotone along degenerations", true, 0, 0, {}};
  for (const auto& [a, b] : poset.covers) {
    ++mono.checked;
    if (table.rows[a].inv.rep_type == RepType::Finite && table.rows[b].inv.rep_type == RepType::Wild)
      fail(mono, pair_label(a) + " finite below wild " + pair_label(b));
  }
  rep.properties.push_back(mono);

  PropertyResult lat{"block exponent equals normalizer quotient rank", true, 0, 0, {}};
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const auto& s = table.rows[k].inv;
    if (!s.block_count_exp) {
      ++lat.skipped;
      continue;
    }
    ++lat.checked;
    const StratumPair sp = make_stratum_pair(table.rows[k].w1, table.rows[k].w2, ell);
    const auto inv = quotient_invariants(*s.normalizer, fixed_points_mod_ell(sp.twist, BasisKind::Root, ell));
    bool ok = inv.size() == *s.block_count_exp;
    for (const auto& d : inv) ok = ok && d == ell;
    if (!ok) fail(lat, pair_label(k));
  }
  rep.properties.push_back(lat);

  PropertyResult az{"fully Azumaya locus is nonempty", true, 0, 0, {}};
  ++az.checked;
  {
    bool any = false;
    for (const auto& row : table.rows) any = any || row.inv.is_azumaya;
    if (!any) fail(az, "no fully Azumaya stratum");
  }
  rep.properties.push_back(az);

  std::vector<BorelInvariants> borel;
  for (const auto& w : elems) borel.push_back(borel_invariants(w, ell));
  PropertyResult bmono{"Borel block count monotone under closure", true, 0, 0, {}};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) {
      if (u == w || !bruhat_leq(elems[u], elems[w])) continue;
      if (!borel[u].block_data_available || !borel[w].block_data_available) {
        ++bmono.skipped;
        continue;
      }
      ++bmono.checked;
      const bool ok = borel[u].block_lower_exp <= borel[w].block_upper_exp &&
                      (!(borel[u].blocks_exact && borel[w].blocks_exact) ||
                       borel[u].block_lower_exp <= borel[w].block_lower_exp);
      if (!ok)
        fail(bmono, format_word(reduced_word(elems[u])) + " <= " + format_word(reduced_word(elems[w])));
    }
  rep.properties.push_back(bmono);

  PropertyResult bound{"Borel blocks bounded by ell^(r - s(w0))", true, 0, 0, {}};
  const std::size_t s0 = rank_s(elems.back());
  for (std::size_t u = 0; u < n; ++u) {
    if (!borel[u].block_data_available) {
      ++bound.skipped;
      continue;
    }
    ++bound.checked;
    if (borel[u].block_upper_exp > r - s0 || borel[u].block_lower_exp > borel[u].block_upper_exp)
      fail(bound, format_word(reduced_word(elems[u])));
    if (has_unique_borel_block_type(g->cd.cartan_type) && borel[u].block_upper_exp != 0)
      fail(bound, format_word(reduced_word(elems[u])) + " has more than one block in a unique-block type");
  }
  rep.properties.push_back(bound);
  return rep;
}

}  // namespace qstrata
