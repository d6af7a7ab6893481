#pragma once

#include <optional>
#include <string>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "intersection_form.hpp"

namespace plumbhf {

enum class Advisory { unknown, pass, fail };

inline const char* to_string(Advisory a) {
  switch (a) {
    case Advisory::pass: return "pass";
    case Advisory::fail: return "fail";
    default: return "unknown";
  }
}

struct ValidationReport {
  bool is_tree = false;
  bool is_negative_definite = false;
  i64 determinant = 0;
  bool is_integral_homology_sphere = false;  // |determinant| == 1
  std::optional<int> distinguished_vertex;   // dense index
  Advisory ar_advisory = Advisory::unknown;
};

// The unique vertex with |m(v)| < degree(v), if exactly one exists.
inline std::optional<int> distinguished_vertex(const PlumbingGraph& g) {
  std::optional<int> found;
  for (int v = 0; v < g.size(); ++v) {
    if (-g.weight(v) < g.degree(v)) {
      if (found) return std::nullopt;  // multiple candidates: ambiguous
      found = v;
    }
  }
  return found;
}

// Laufer's algorithm for the fundamental cycle: start from one basis vector
// and keep adding any E_u that still pairs positively. Terminates on
// negative-definite connected graphs; the budget caps pathological inputs.
inline Cycle fundamental_cycle(const PlumbingGraph& g, i64 budget = 1000000) {
  const int n = g.size();
  Cycle z(static_cast<std::size_t>(n), 0);
  std::vector<i64> pair(static_cast<std::size_t>(n), 0);  // pair[u] = (z, E_u)
  auto add = [&](int u) {
    if (--budget < 0) throw BudgetError("fundamental cycle did not stabilize within budget");
    z[static_cast<std::size_t>(u)] = checked_add(z[static_cast<std::size_t>(u)], 1);
    pair[static_cast<std::size_t>(u)] = checked_add(pair[static_cast<std::size_t>(u)], g.weight(u));
    for (int w : g.neighbors(u))
      pair[static_cast<std::size_t>(w)] = checked_add(pair[static_cast<std::size_t>(w)], 1);
  };
  add(0);
  for (;;) {
    int next = -1;
    for (int u = 0; u < n; ++u)
      if (pair[static_cast<std::size_t>(u)] > 0) {
        next = u;
        break;
      }
    if (next < 0) break;
    add(next);
  }
  return z;
}

// Artin's criterion: the graph is rational iff chi(Z_min) = 1, where
// chi(z) = -((z,z) + (z,K))/2 and (E_v, K) = -m(v) - 2.
inline bool is_rational(const PlumbingGraph& g, i64 budget = 1000000) {
  if (!g.is_tree()) throw InputError("rationality test requires a connected tree");
  IntersectionForm form(g);
  if (!form.is_negative_definite())
    throw InputError("rationality test requires a negative-definite graph");
  Cycle z = fundamental_cycle(g, budget);
  i64 zz = form.pairing(z, z);
  i64 zk = 0;
  for (int v = 0; v < g.size(); ++v)
    zk = checked_add(zk, checked_mul(z[static_cast<std::size_t>(v)],
                                     checked_sub(-2, g.weight(v))));
  i64 s = checked_add(zz, zk);
  if (s % 2 != 0) throw Error("internal consistency: chi(Z_min) is not an integer");
  return -s / 2 == 1;
}

// Almost-rationality advisory: decreasing a vertex weight preserves
// rationality, so it is enough to test rationality once with the
// distinguished vertex's weight pushed far down (-2|V| is comfortably past
// the point where further decreases stop mattering for these graph sizes).
// Best effort by design; the result is advisory, never load-bearing.
inline Advisory ar_advisory(const PlumbingGraph& g) {
  auto v0 = distinguished_vertex(g);
  if (!v0 || !g.is_tree()) return Advisory::unknown;
  std::vector<std::pair<i64, i64>> vertices;
  std::vector<std::pair<i64, i64>> edges;
  i64 low = checked_mul(-2, static_cast<i64>(g.size()));
  for (int v = 0; v < g.size(); ++v)
    vertices.emplace_back(g.original_id(v), v == *v0 ? std::min(g.weight(v), low) : g.weight(v));
  for (auto [a, b] : g.edges()) edges.emplace_back(g.original_id(a), g.original_id(b));
  try {
    return is_rational(PlumbingGraph(vertices, edges)) ? Advisory::pass : Advisory::fail;
  } catch (const Error&) {
    return Advisory::unknown;
  }
}

inline ValidationReport validate(const PlumbingGraph& g, bool run_ar_advisory = false) {
  ValidationReport rep;
  rep.is_tree = g.is_tree();
  IntersectionForm form(g);
  rep.is_negative_definite = form.is_negative_definite();
  rep.determinant = form.determinant();
  rep.is_integral_homology_sphere = rep.determinant == 1 || rep.determinant == -1;
  rep.distinguished_vertex = distinguished_vertex(g);
  if (run_ar_advisory) rep.ar_advisory = ar_advisory(g);
  return rep;
}

}  // namespace plumbhf
