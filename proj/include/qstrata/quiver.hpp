#pragma once

// Multiply-edged Cayley graphs of finite abelian groups. Each generator x with
// multiplicity m contributes m parallel arrows v -> v - x at every vertex v
// (the eta -> eta chi^{-1} convention for quivers of skew group algebras).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "intmat.hpp"
#include "lattice.hpp"

namespace qstrata {

struct CayleyGenerator {
  IntVec element;
  std::size_t multiplicity = 1;
};

struct CayleyEdge {
  std::size_t from = 0, to = 0;  ///< vertex indices
  std::size_t gen = 0;           ///< generator index
  std::size_t multiplicity = 1;
};

struct CayleyGraph {
  std::vector<std::int64_t> moduli;            ///< coordinate i lives in Z/moduli[i]
  std::vector<std::int64_t> group_invariants;  ///< invariant factors (> 1) of the vertex group
  std::vector<IntVec> vertices;                ///< sorted lexicographically
  std::vector<CayleyGenerator> generators;
  std::vector<CayleyEdge> edges;               ///< sorted by (from, gen)

  std::size_t vertex_index(const IntVec& v) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw GroupError("element is not a vertex of the graph");
    return static_cast<std::size_t>(it - vertices.begin());
  }
  std::size_t arrow_count() const {
    std::size_t n = 0;
    for (const auto& e : edges) n += e.multiplicity;
    return n;
  }
};

namespace quiver_detail {

inline IntVec reduce(IntVec v, const std::vector<std::int64_t>& moduli) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ((v[i] % moduli[i]) + moduli[i]) % moduli[i];
  return v;
}

inline std::vector<IntVec> all_elements(const std::vector<std::int64_t>& moduli) {
  std::vector<IntVec> out;
  IntVec v(moduli.size(), 0);
  for (;;) {
    out.push_back(v);
    std::size_t k = moduli.size();
    for (;;) {
      if (k == 0) return out;
      --k;
      if (++v[k] < moduli[k]) break;
      v[k] = 0;
    }
  }
}

/// Invariant factors (> 1) of prod Z/m_i.
inline std::vector<std::int64_t> invariant_factors(const std::vector<std::int64_t>& moduli) {
  BigMat diag;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    BigVec row(moduli.size(), 0);
    row[i] = moduli[i];
    diag.push_back(std::move(row));
  }
  std::vector<std::int64_t> out;
  for (const auto& d : smith_invariants(diag, moduli.size()))
    if (d > 1) out.push_back(lattice_detail::to_i64(d));
  return out;
}

inline CayleyGraph build(std::vector<std::int64_t> moduli, std::vector<IntVec> vertices,
                         std::vector<std::int64_t> invariants, const std::vector<CayleyGenerator>& gens) {
  CayleyGraph g;
  g.moduli = std::move(moduli);
  g.group_invariants = std::move(invariants);
  std::sort(vertices.begin(), vertices.end());
  g.vertices = std::move(vertices);
  for (const auto& x : gens) {
    if (x.element.size() != g.moduli.size()) throw GroupError("generator has wrong length");
    if (x.multiplicity == 0) throw GroupError("generator multiplicity must be at least 1");
    CayleyGenerator y{reduce(x.element, g.moduli), x.multiplicity};
    if (!std::binary_search(g.vertices.begin(), g.vertices.end(), y.element))
      throw GroupError("generator lies outside the group");
    g.generators.push_back(std::move(y));
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      IntVec t = g.vertices[v];
      for (std::size_t i = 0; i < t.size(); ++i) t[i] -= g.generators[k].element[i];
      g.edges.push_back({v, g.vertex_index(reduce(t, g.moduli)), k, g.generators[k].multiplicity});
    }
  return g;
}

}  // namespace quiver_detail

/// Cayley graph of the abstract group prod Z/moduli[i].
inline CayleyGraph cayley_graph(const std::vector<std::int64_t>& moduli, const std::vector<CayleyGenerator>& gens) {
  for (auto m : moduli)
    if (m < 1) throw GroupError("cyclic factor orders must be positive");
  return quiver_detail::build(moduli, quiver_detail::all_elements(moduli), quiver_detail::invariant_factors(moduli),
                              gens);
}

/// Cayley graph of a subgroup of (Z/ell)^r; generators must lie in it.
inline CayleyGraph cayley_graph(const EllSubgroup& group, const std::vector<CayleyGenerator>& gens) {
  std::vector<std::int64_t> moduli(group.ambient_rank(), group.ell());
  std::vector<std::int64_t> inv;
  for (const auto& d : quotient_invariants(EllSubgroup::trivial(group.basis_kind(), group.ambient_rank(), group.ell()),
                                           group))
    inv.push_back(lattice_detail::to_i64(d));
  return quiver_detail::build(moduli, group.elements(), inv, gens);
}

/// Number of weakly connected components (union-find).
inline std::size_t connected_components(const CayleyGraph& g) {
  std::vector<std::size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = g.vertices.size();
  for (const auto& e : g.edges) {
    const auto a = find(e.from), b = find(e.to);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

inline std::string vertex_label(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

/// Graphviz DOT; parallel arrows are written out one line each.
inline std::string to_dot(const CayleyGraph& g, const std::string& name = "cayley") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    os << "  v" << v << " [label=\"" << vertex_label(g.vertices[v]) << "\"];\n";
  for (const auto& e : g.edges)
    for (std::size_t k = 0; k < e.multiplicity; ++k)
      os << "  v" << e.from << " -> v" << e.to << " [label=\"g" << e.gen << "\"];\n";
  os << "}\n";
  return os.str();
}

/// Out- and in-degree (with multiplicity) of every vertex.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> degrees(const CayleyGraph& g) {
  std::vector<std::size_t> out(g.vertices.size(), 0), in(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    out[e.from] += e.multiplicity;
    in[e.to] += e.multiplicity;
  }
  return {out, in};
}

/// Adjacency multiplicities adj[from][to].
inline std::vector<std::vector<std::size_t>> adjacency(const CayleyGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertices.size(), std::vector<std::size_t>(g.vertices.size(), 0));
  for (const auto& e : g.edges) adj[e.from][e.to] += e.multiplicity;
  return adj;
}

/// True when the multigraph with adjacency `adj` is a single directed cycle
/// through every vertex (a loop for one vertex).
inline bool is_directed_cycle(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return false;
  std::vector<std::size_t> succ(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t out = 0;
    for (std::size_t j = 0; j < n; ++j) {
      out += adj[i][j];
      if (adj[i][j]) succ[i] = j;
    }
    if (out != 1) return false;
  }
  std::size_t v = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    v = succ[v];
    if (v == 0) return step == n;
  }
  return false;
}

/// Parses "Z5^2", "Z3xZ5", "Z3 x Z3^2" into cyclic factor orders.
inline std::vector<std::int64_t> parse_group_spec(const std::string& text) {
  std::vector<std::int64_t> moduli;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> std::int64_t {
    const std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) throw ParseError("number too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a number", pos);
    return v;
  };
  skip();
  if (pos == text.size()) return moduli;  // trivial group
  for (;;) {
    skip();
    if (pos >= text.size() || (text[pos] != 'Z' && text[pos] != 'z')) throw ParseError("expected 'Z'", pos);
    ++pos;
    const std::size_t at = pos;
    const std::int64_t m = number();
    if (m < 1) throw ParseError("cyclic order must be positive", at);
    std::int64_t reps = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      reps = number();
    }
    for (std::int64_t k = 0; k < reps; ++k) moduli.push_back(m);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X' && text[pos] != '*') throw ParseError("expected 'x' between factors", pos);
    ++pos;
  }
  return moduli;
}

/// Parses "1,0:1;0,1:2" (element:multiplicity, multiplicity defaults to 1).
inline std::vector<CayleyGenerator> parse_generators(const std::string& text, std::size_t rank) {
  std::vector<CayleyGenerator> gens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string item = text.substr(pos, end - pos);
    CayleyGenerator g;
    const std::size_t colon = item.find(':');
    const std::string coords = item.substr(0, colon);
    std::size_t i = 0;
    while (i <= coords.size()) {
      const std::size_t comma = std::min(coords.find(',', i), coords.size());
      const std::string tok = coords.substr(i, comma - i);
      try {
        std::size_t used = 0;
        g.element.push_back(std::stoll(tok, &used));
        if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad generator coordinate '" + tok + "'", pos + i);
      }
      i = comma + 1;
    }
    if (g.element.size() != rank)
      throw ParseError("generator has " + std::to_string(g.element.size()) + " coordinates, expected " +
                           std::to_string(rank),
                       pos);
    if (colon != std::string::npos) {
      try {
        const long long m = std::stoll(item.substr(colon + 1));
        if (m < 1) throw std::invalid_argument("mult");
        g.multiplicity = static_cast<std::size_t>(m);
      } catch (const std::exception&) {
        throw ParseError("bad multiplicity", pos + colon + 1);
      }
    }
    gens.push_back(std::move(g));
    pos = end + 1;
  }
  return gens;
}

}  // namespace qstrata
