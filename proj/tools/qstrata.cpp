// qstrata: invariants of quantised function algebras and Borels at roots of
// unity, stratum tables, degeneration posets, Cayley quivers and the
// verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qstrata/qstrata.hpp"

using namespace qstrata;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string type;
  std::int64_t ell = 0;
  std::string w, w1, w2;
  std::string format;  // empty: per-command default
  std::string output;
  std::size_t cap = default_table_cap();
  std::string group, gens;
  std::string suite = "all";
  std::uint64_t seed = 20240611;
  std::size_t trials = 50;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw UsageError("format '" + o.format + "' is not available here (choose " + list + ")");
}

/// Writes to --output when given, else stdout.
void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw UsageError("cannot open output file " + o.output);
  f << text;
}

std::string count_text(std::int64_t ell, std::size_t exp) {
  return ell_power(ell, exp) + " (" + std::to_string(ell) + "^" + std::to_string(exp) + ")";
}

int cmd_info(const Options& o) {
  require_format(o, {"text", "json"});
  auto g = make_weyl(o.type);
  const WeylElement w1 = parse_word_expr(g, o.w1), w2 = parse_word_expr(g, o.w2);
  const StratumPair p = make_stratum_pair(w1, w2, o.ell);
  const StratumInvariants s = stratum_invariants(p);
  if (o.format == "json") {
    emit(o, to_json(s, p).dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << "type " << g->cd.cartan_type.label() << ", ell " << o.ell << ", N " << s.N << ", r " << s.r << "\n";
  os << "w1 = " << format_word(reduced_word(w1)) << " (length " << s.len1 << ")\n";
  os << "w2 = " << format_word(reduced_word(w2)) << " (length " << s.len2 << ")\n";
  os << "twist w2^-1 w1 = " << format_word(reduced_word(p.twist)) << ", s = " << s.s_twist << ", order "
     << s.twist_order << "\n";
  os << "algebra dimension  " << count_text(s.ell, s.algebra_dim_exp) << "\n";
  os << "simple modules     " << count_text(s.ell, s.simple_count_exp) << " of dimension "
     << count_text(s.ell, s.simple_dim_exp) << "\n";
  if (s.block_count_exp) {
    os << "blocks             " << count_text(s.ell, *s.block_count_exp) << ", "
       << count_text(s.ell, *s.simples_per_block_exp) << " simples each\n";
  } else {
    os << "blocks             unavailable (ell is not prime to the order of the twist)\n";
  }
  os << "frakS              {" << format_index_set(s.frak_s) << "}\n";
  os << "fully Azumaya      " << (s.is_azumaya ? "yes" : "no") << "\n";
  os << "semisimple         " << (s.is_semisimple ? "yes" : "no") << "\n";
  os << "representation     " << rep_type_name(s.rep_type) << "\n";
  os << "fibres            ";
  for (auto k : s.fiber.kinds) os << " " << fiber_kind_name(k);
  os << "\n";
  emit(o, os.str());
  return kExitOk;
}

int cmd_borel(const Options& o) {
  require_format(o, {"text", "json"});
  auto g = make_weyl(o.type);
  const WeylElement w = parse_word_expr(g, o.w);
  const BorelInvariants b = borel_invariants(w, o.ell);
  if (o.format == "json") {
    emit(o, to_json(b, w).dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << "type " << g->cd.cartan_type.label() << ", ell " << o.ell << ", N " << b.N << ", r " << b.r << "\n";
  os << "w = " << format_word(reduced_word(w)) << " (length " << b.len << "), s = " << b.s_w << ", order "
     << b.w_order << ", absent letters " << b.d << "\n";
  os << "algebra dimension  " << count_text(b.ell, b.algebra_dim_exp) << "\n";
  os << "simple modules     " << count_text(b.ell, b.simple_count_exp) << " of dimension "
     << count_text(b.ell, b.simple_dim_exp) << "\n";
  if (!b.block_data_available)
    os << "blocks             unavailable (ell is not prime to the order of w)\n";
  else if (b.blocks_exact)
    os << "blocks             " << count_text(b.ell, b.block_lower_exp) << " [" << borel_rule_name(b.rule) << "]\n";
  else
    os << "blocks             between " << count_text(b.ell, b.block_lower_exp) << " and "
       << count_text(b.ell, b.block_upper_exp) << " [" << borel_rule_name(b.rule) << "]\n";
  os << "representation     " << rep_type_name(b.rep_type) << "\n";
  emit(o, os.str());
  return kExitOk;
}

int cmd_table(const Options& o) {
  require_format(o, {"csv", "json"});
  auto g = make_weyl(o.type);
  std::unique_ptr<std::ofstream> file;
  std::ostream* out = &std::cout;
  if (!o.output.empty()) {
    file = std::make_unique<std::ofstream>(o.output);
    if (!*file) throw UsageError("cannot open output file " + o.output);
    out = file.get();
  }
  const std::string label = g->cd.cartan_type.label();
  if (o.format == "csv") {
    write_csv_header(*out);
    stream_table(g, o.ell, [&](const StratumRow& row) { write_csv_row(*out, label, row); }, o.cap);
  } else {
    bool first = true;
    *out << "[\n";
    stream_table(
        g, o.ell,
        [&](const StratumRow& row) {
          *out << (first ? "" : ",\n") << to_json(row).dump();
          first = false;
        },
        o.cap);
    *out << "\n]\n";
  }
  return kExitOk;
}

int cmd_poset(const Options& o) {
  require_format(o, {"text", "json", "dot"});
  auto g = make_weyl(o.type);
  const DegenerationPoset p = build_poset(g, o.cap);
  if (o.format == "json") {
    emit(o, to_json(p).dump(2) + "\n");
  } else if (o.format == "dot") {
    emit(o, poset_to_dot(p));
  } else {
    std::ostringstream os;
    os << p.cartan_type << ": " << p.node_count() << " strata, " << p.covers.size() << " covers\n";
    for (const auto& [a, b] : p.covers) os << node_label(p, a) << " < " << node_label(p, b) << "\n";
    emit(o, os.str());
  }
  return kExitOk;
}

int cmd_quiver(const Options& o) {
  require_format(o, {"text", "json", "dot"});
  if (!o.type.empty()) {
    // vertex group N(w1, w2) of a block; its arrows are not fixed by the combinatorial data
    auto g = make_weyl(o.type);
    const StratumPair p = make_stratum_pair(parse_word_expr(g, o.w1), parse_word_expr(g, o.w2), o.ell);
    const StratumInvariants s = stratum_invariants(p);
    if (!s.normalizer)
      throw UsageError("ell is not prime to the order of the twist; the block normalizer is unavailable");
    const CayleyGraph graph = cayley_graph(*s.normalizer, {});
    if (o.format == "json") {
      json j = to_json(graph);
      j["arrows"] = "undetermined by the block data";
      j["normalizer"] = subgroup_json(*s.normalizer);
      emit(o, j.dump(2) + "\n");
    } else if (o.format == "dot") {
      emit(o, to_dot(graph, "block"));
    } else {
      std::ostringstream os;
      os << "vertex group N(w1,w2) of order " << graph.vertices.size() << " (arrows undetermined)\n";
      for (const auto& v : graph.vertices) os << vertex_label(v) << "\n";
      emit(o, os.str());
    }
    return kExitOk;
  }
  if (o.group.empty()) throw UsageError("quiver needs --group (or --type with --ell, --w1, --w2)");
  const auto moduli = parse_group_spec(o.group);
  const CayleyGraph graph = cayley_graph(moduli, parse_generators(o.gens, moduli.size()));
  if (o.format == "json") {
    emit(o, to_json(graph).dump(2) + "\n");
  } else if (o.format == "dot") {
    emit(o, to_dot(graph));
  } else {
    std::ostringstream os;
    os << graph.vertices.size() << " vertices, " << graph.arrow_count() << " arrows, "
       << connected_components(graph) << " components\n";
    for (const auto& e : graph.edges)
      os << vertex_label(graph.vertices[e.from]) << " -> " << vertex_label(graph.vertices[e.to]) << " x"
         << e.multiplicity << "\n";
    emit(o, os.str());
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  require_format(o, {"text", "json"});
  const std::string suite = o.suite;
  if (suite != "oracle" && suite != "lattice" && suite != "sweep" && suite != "all")
    throw UsageError("unknown suite '" + suite + "' (choose oracle, lattice, sweep, all)");
  auto g = make_weyl(o.type.empty() ? "A2" : o.type);
  const std::int64_t ell = o.ell ? o.ell : 3;
  require_good_ell(g->cd, ell);
  std::vector<SuiteResult> results;
  // an algebra-level exception inside a suite is a verification failure, not a usage error
  auto run = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const AlgebraError& e) {
      SuiteResult r(name);
      r.fail(e.what());
      results.push_back(std::move(r));
    }
  };
  if (suite == "oracle" || suite == "all") {
    run("fiber algebra blocks", [&] { results.push_back(fiber_block_suite(g, ell, o.cap)); });
    run("skew group algebra blocks", [&] { results.push_back(skew_block_suite(o.seed, o.trials, 3)); });
    run("Borel sl2", [&] { results.push_back(borel_sl2_suite(3)); });
  }
  if (suite == "lattice" || suite == "all")
    for (auto& r : lattice_suite(g, ell, o.cap)) results.push_back(std::move(r));
  if (suite == "sweep" || suite == "all") results.push_back(sweep_suite(g, ell, o.cap));
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"name", r.name},
                     {"passed", r.passed()},
                     {"checked", r.checked},
                     {"skipped", r.skipped},
                     {"failure_count", r.failure_count},
                     {"failures", r.failures}});
    emit(o, json{{"type", g->cd.cartan_type.label()}, {"ell", ell}, {"passed", ok}, {"suites", arr}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      os << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checked";
      if (r.skipped) os << ", " << r.skipped << " skipped";
      os << ")\n";
      for (const auto& f : r.failures) os << "  " << f << "\n";
    }
    emit(o, os.str());
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of quantised function algebras and Borels at roots of unity"};
  app.require_subcommand(1);
  Options o;
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "largest Weyl group order enumerated (default from QSTRATA_CAP, else 1152)");
  };

  auto* info = app.add_subcommand("info", "invariants of the stratum X_{w1,w2} of the function algebra");
  info->add_option("type", o.type, "Cartan type, e.g. A2, B3, G2")->required();
  info->add_option("--ell", o.ell, "order of the root of unity")->required();
  info->add_option("--w1", o.w1, "word: '', e, 1,2,1, w0, w0*1,2")->required();
  info->add_option("--w2", o.w2, "word")->required();
  info->add_option("--format", o.format, "text or json");
  info->add_option("-o,--output", o.output, "output file");

  auto* borel = app.add_subcommand("borel", "invariants of the Borel algebra over the stratum of w");
  borel->add_option("type", o.type, "Cartan type")->required();
  borel->add_option("--ell", o.ell, "order of the root of unity")->required();
  borel->add_option("--w", o.w, "word")->required();
  borel->add_option("--format", o.format, "text or json");
  borel->add_option("-o,--output", o.output, "output file");

  auto* table = app.add_subcommand("table", "invariants of every stratum pair");
  table->add_option("type", o.type, "Cartan type")->required();
  table->add_option("--ell", o.ell, "order of the root of unity")->required();
  table->add_option("--format", o.format, "csv (default) or json");
  table->add_option("-o,--output", o.output, "output file");
  add_cap(table);

  auto* poset = app.add_subcommand("poset", "degeneration order on stratum pairs");
  poset->add_option("type", o.type, "Cartan type")->required();
  poset->add_option("--format", o.format, "text, json or dot");
  poset->add_option("-o,--output", o.output, "output file");
  add_cap(poset);

  auto* quiver = app.add_subcommand("quiver", "multiply-edged Cayley graph");
  quiver->add_option("--group", o.group, "group, e.g. Z5^2 or Z3xZ5");
  quiver->add_option("--gens", o.gens, "generators 'x1,x2:mult;...'");
  quiver->add_option("--type", o.type, "Cartan type: emit the block vertex group N(w1,w2) instead");
  quiver->add_option("--ell", o.ell, "order of the root of unity (with --type)");
  quiver->add_option("--w1", o.w1, "word (with --type)");
  quiver->add_option("--w2", o.w2, "word (with --type)");
  quiver->add_option("--format", o.format, "text, json or dot");
  quiver->add_option("-o,--output", o.output, "output file");

  auto* verify = app.add_subcommand("verify", "run verification suites; exit 1 on any failure");
  verify->add_option("--suite", o.suite, "oracle, lattice, sweep or all");
  verify->add_option("--type", o.type, "Cartan type (default A2)");
  verify->add_option("--ell", o.ell, "order of the root of unity (default 3)");
  verify->add_option("--seed", o.seed, "seed for randomized oracle trials");
  verify->add_option("--trials", o.trials, "number of randomized oracle trials");
  verify->add_option("--format", o.format, "text or json");
  verify->add_option("-o,--output", o.output, "output file");
  add_cap(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (o.format.empty()) o.format = *table ? "csv" : (*quiver && o.type.empty()) ? "dot" : "text";
  try {
    if (*info) return cmd_info(o);
    if (*borel) return cmd_borel(o);
    if (*table) return cmd_table(o);
    if (*poset) return cmd_poset(o);
    if (*quiver) return cmd_quiver(o);
    if (*verify) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    // bad words, types, ell values and caps are all input problems
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
