#pragma once

// JSON encodings of invariants, graphs, tables and finite-dimensional algebras.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>  // vendored nlohmann::json

#include "invariants.hpp"
#include "quiver.hpp"
#include "skewalg.hpp"
#include "strata.hpp"

namespace qstrata {

using json = nlohmann::json;

/// A count ell^exp.
inline json power_json(std::int64_t base, std::size_t exp) { return json{{"base", base}, {"exp", exp}}; }

inline json vec_json(const IntVec& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

inline json subgroup_json(const EllSubgroup& g) {
  json gens = json::array();
  for (const auto& v : g.generators()) gens.push_back(vec_json(v));
  return json{{"basis", basis_kind_name(g.basis_kind())}, {"ell", g.ell()}, {"order_exp", g.order_exponent()},
              {"generators", gens}};
}

inline json to_json(const StratumInvariants& s, const StratumPair& p) {
  json j;
  j["type"] = p.w1.cartan().cartan_type.label();
  j["ell"] = s.ell;
  j["w1"] = format_word(reduced_word(p.w1));
  j["w2"] = format_word(reduced_word(p.w2));
  j["twist"] = format_word(reduced_word(p.twist));
  j["len1"] = s.len1;
  j["len2"] = s.len2;
  j["N"] = s.N;
  j["r"] = s.r;
  j["s_twist"] = s.s_twist;
  j["twist_order"] = s.twist_order;
  j["algebra_dim"] = power_json(s.ell, s.algebra_dim_exp);
  j["simples"] = power_json(s.ell, s.simple_count_exp);
  j["simple_dim"] = power_json(s.ell, s.simple_dim_exp);
  j["azumaya"] = s.is_azumaya;
  j["semisimple"] = s.is_semisimple;
  j["rep_type"] = rep_type_name(s.rep_type);
  j["frakS"] = s.frak_s;
  json fib = json::array();
  for (auto k : s.fiber.kinds) fib.push_back(fiber_kind_name(k));
  j["fiber"] = fib;
  if (s.block_count_exp) {
    j["blocks"] = power_json(s.ell, *s.block_count_exp);
    j["simples_per_block"] = power_json(s.ell, *s.simples_per_block_exp);
    j["normalizer"] = subgroup_json(*s.normalizer);
  } else {
    j["blocks"] = nullptr;
    j["simples_per_block"] = nullptr;
    j["blocks_unavailable"] = "ell is not prime to the order of the twist";
  }
  return j;
}

inline json to_json(const BorelInvariants& b, const WeylElement& w) {
  json j;
  j["type"] = w.cartan().cartan_type.label();
  j["ell"] = b.ell;
  j["w"] = format_word(reduced_word(w));
  j["len"] = b.len;
  j["s_w"] = b.s_w;
  j["absent_letters"] = b.d;
  j["order"] = b.w_order;
  j["algebra_dim"] = power_json(b.ell, b.algebra_dim_exp);
  j["simples"] = power_json(b.ell, b.simple_count_exp);
  j["simple_dim"] = power_json(b.ell, b.simple_dim_exp);
  j["rep_type"] = rep_type_name(b.rep_type);
  if (!b.block_data_available) {
    j["blocks"] = nullptr;
    j["blocks_unavailable"] = "ell is not prime to the order of w";
  } else if (b.blocks_exact) {
    j["blocks"] = power_json(b.ell, b.block_lower_exp);
    j["rule"] = borel_rule_name(b.rule);
  } else {
    j["blocks"] = nullptr;
    j["blocks_interval"] = {power_json(b.ell, b.block_lower_exp), power_json(b.ell, b.block_upper_exp)};
    j["rule"] = borel_rule_name(b.rule);
  }
  return j;
}

inline json to_json(const CayleyGraph& g) {
  json verts = json::array(), gens = json::array(), edges = json::array();
  for (const auto& v : g.vertices) verts.push_back(vec_json(v));
  for (const auto& x : g.generators) gens.push_back({{"element", vec_json(x.element)}, {"mult", x.multiplicity}});
  for (const auto& e : g.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"gen", e.gen}, {"mult", e.multiplicity}});
  return json{{"group_invariants", g.group_invariants}, {"vertices", verts}, {"generators", gens}, {"edges", edges}};
}

inline json to_json(const StratumRow& row) {
  return to_json(row.inv, make_stratum_pair(row.w1, row.w2, row.inv.ell));
}

inline json to_json(const SweepReport& rep) {
  json props = json::array();
  for (const auto& p : rep.properties) {
    json q{{"name", p.name}, {"passed", p.passed}, {"checked", p.checked}, {"skipped", p.skipped}};
    if (!p.passed) q["counterexample"] = p.counterexample;
    props.push_back(q);
  }
  return json{{"type", rep.cartan_type}, {"ell", rep.ell}, {"passed", rep.all_passed()}, {"properties", props}};
}

inline json to_json(const DegenerationPoset& p) {
  json nodes = json::array(), covers = json::array();
  for (std::size_t n = 0; n < p.node_count(); ++n) {
    const auto [i, j] = p.components(n);
    nodes.push_back({format_word(reduced_word(p.elements[i])), format_word(reduced_word(p.elements[j]))});
  }
  for (const auto& [a, b] : p.covers) covers.push_back({a, b});
  return json{{"type", p.cartan_type}, {"nodes", nodes}, {"covers", covers}};
}

inline json to_json(const BlockReport& rep) {
  json chars = json::array();
  for (const auto& [chi, m] : rep.char_multiplicities) chars.push_back({{"character", vec_json(chi)}, {"mult", m}});
  json y = json::array(), d = json::array();
  for (const auto& v : rep.y_subgroup) y.push_back(vec_json(v));
  for (const auto& v : rep.d_subgroup) d.push_back(vec_json(v));
  return json{{"block_count", rep.block_count}, {"block_dims", rep.block_dims}, {"characters", chars},
              {"Y", y},
              {"D", d},
              {"quiver", to_json(rep.quiver)}};
}

/// {dim, p, unit, sc: [[i, j, k, v], ...]}
inline json to_json(const FDAlgebra& a) {
  json sc = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& t : a.product_terms(i, j)) sc.push_back({i, j, t.k, t.v});
  return json{{"dim", a.dim()}, {"p", a.field_char()}, {"unit", a.unit()}, {"sc", sc}};
}

inline FDAlgebra algebra_from_json(const json& j) {
  try {
    std::vector<std::array<std::int64_t, 4>> sc;
    for (const auto& t : j.at("sc")) sc.push_back({t.at(0).get<std::int64_t>(), t.at(1).get<std::int64_t>(),
                                                   t.at(2).get<std::int64_t>(), t.at(3).get<std::int64_t>()});
    fp::Vec unit;
    const auto p = j.at("p").get<fp::Elem>();
    for (const auto& x : j.at("unit")) unit.push_back(fp::from_int(x.get<std::int64_t>(), p));
    return make_algebra(j.at("dim").get<std::size_t>(), p, sc, unit);
  } catch (const json::exception& e) {
    throw AlgebraError(std::string("malformed algebra JSON: ") + e.what());
  }
}

}  // namespace qstrata
