#pragma once

#include <array>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace plumbhf {

// The Mazur-boundary plumbing G_n: central vertex v0 of weight -1 attached
// to a -2 leaf, a -(2n+3) leaf, and a -4 vertex that carries two chains of
// -2 vertices of lengths n and n-1. 2n+3 vertices in total; G_1 degenerates
// to the star with legs [-2], [-5], [-4,-2].
inline PlumbingGraph mazur_graph(int n) {
  if (n < 1) throw InputError("mazur_graph: n must be >= 1");
  std::vector<i64> weights = {-1, -2, checked_neg(checked_add(checked_mul(2, n), 3)), -4};
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}};
  int prev = 3;
  for (int k = 0; k < n; ++k) {
    weights.push_back(-2);
    edges.emplace_back(prev, static_cast<int>(weights.size()) - 1);
    prev = static_cast<int>(weights.size()) - 1;
  }
  prev = 3;
  for (int k = 0; k + 1 < n; ++k) {
    weights.push_back(-2);
    edges.emplace_back(prev, static_cast<int>(weights.size()) - 1);
    prev = static_cast<int>(weights.size()) - 1;
  }
  return PlumbingGraph::from_weights(weights, edges);
}

// rank HF_red of the G_n boundary: n(n+1)(n+2)/3, always an even integer.
inline i64 mazur_rank(int n) {
  if (n < 1) throw InputError("mazur_rank: n must be >= 1");
  i64 prod = checked_mul(checked_mul(n, checked_add(n, 1)), checked_add(n, 2));
  return prod / 3;
}

struct BrieskornTriple {
  i64 p, q, r;

  BrieskornTriple(i64 a, i64 b, i64 c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    p = a;
    q = b;
    r = c;
    if (p <= 1)
      throw InputError("Brieskorn triple requires 1 < p < q < r, got p = " + std::to_string(p));
    if (p == q || q == r) throw InputError("Brieskorn triple entries must be distinct");
    if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1)
      throw InputError("Brieskorn triple entries must be pairwise relatively prime");
  }
};

struct SeifertInvariants {
  i64 e0;
  std::array<std::pair<i64, i64>, 3> pairs;  // (alpha, alpha') with 0 < alpha' < alpha
};

namespace detail {

inline i64 mod_inverse(i64 a, i64 m) {
  i64 t = 0, new_t = 1;
  i64 r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    i64 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InputError("modular inverse does not exist (inputs not coprime)");
  return ((t % m) + m) % m;
}

// unique x in (0, m) with x * a == -1 (mod m)
inline i64 solve_neg_congruence(i64 a, i64 m) {
  i64 x = (m - mod_inverse(a, m)) % m;
  return x == 0 ? m : x;  // a^{-1} == 0 mod m is impossible for m > 1
}

}  // namespace detail

// (e0, p', q', r') from the congruences p'qr == -1 (mod p) etc.; the
// Diophantine identity e0*pqr + p'qr + pq'r + pqr' = -1 then determines e0
// exactly. Note the closed forms sometimes quoted for these invariants can
// go non-integral; the congruences are the ground truth.
inline SeifertInvariants seifert_invariants(const BrieskornTriple& t) {
  i64 pp = detail::solve_neg_congruence(checked_mul(t.q, t.r) % t.p, t.p);
  i64 qq = detail::solve_neg_congruence(checked_mul(t.p, t.r) % t.q, t.q);
  i64 rr = detail::solve_neg_congruence(checked_mul(t.p, t.q) % t.r, t.r);
  i64 pqr = checked_mul(checked_mul(t.p, t.q), t.r);
  i64 num = -1;
  num = checked_sub(num, checked_mul(pp, checked_mul(t.q, t.r)));
  num = checked_sub(num, checked_mul(t.p, checked_mul(qq, t.r)));
  num = checked_sub(num, checked_mul(t.p, checked_mul(t.q, rr)));
  if (num % pqr != 0) throw Error("internal consistency: e0 is not an integer");
  SeifertInvariants inv;
  inv.e0 = num / pqr;
  inv.pairs = {{{t.p, pp}, {t.q, qq}, {t.r, rr}}};
  return inv;
}

// alpha/alpha' = c1 - 1/(c2 - 1/(...)) with every ci >= 2.
inline std::vector<i64> negative_continued_fraction(i64 alpha, i64 alpha_prime) {
  if (!(0 < alpha_prime && alpha_prime < alpha))
    throw InputError("continued fraction requires 0 < alpha' < alpha");
  std::vector<i64> terms;
  i64 a = alpha, b = alpha_prime;
  while (b != 0) {
    i64 c = checked_add(a, checked_sub(b, 1)) / b;  // ceil(a/b)
    terms.push_back(c);
    i64 next = checked_sub(checked_mul(c, b), a);
    a = b;
    b = next;
  }
  return terms;
}

// Star-shaped plumbing of the Brieskorn sphere: center e0, one leg per
// Seifert pair, leg weights = negated continued-fraction terms with the
// first term adjacent to the center.
inline PlumbingGraph brieskorn_graph(const BrieskornTriple& t) {
  SeifertInvariants inv = seifert_invariants(t);
  std::vector<i64> weights = {inv.e0};
  std::vector<std::pair<int, int>> edges;
  for (const auto& [alpha, alpha_prime] : inv.pairs) {
    int prev = 0;
    for (i64 c : negative_continued_fraction(alpha, alpha_prime)) {
      weights.push_back(checked_neg(c));
      edges.emplace_back(prev, static_cast<int>(weights.size()) - 1);
      prev = static_cast<int>(weights.size()) - 1;
    }
  }
  return PlumbingGraph::from_weights(weights, edges);
}

enum class CHFamily { family1, family2 };
enum class CHSign { plus, minus };

// The two Casson-Harer series with closed-form tau and rank:
//   family1: Sigma(p, ps+e, ps+2e), p odd, e = +/-1
//   family2: Sigma(p, ps-1, ps+1), p even, s odd
struct CassonHarerFamily {
  CHFamily family;
  i64 p, s;
  CHSign sign;  // family1 only

  CassonHarerFamily(CHFamily f, i64 p_, i64 s_, CHSign sign_ = CHSign::plus)
      : family(f), p(p_), s(s_), sign(sign_) {
    if (p < 2 || s < 1) throw InputError("Casson-Harer parameters require p >= 2, s >= 1");
    if (family == CHFamily::family1 && p % 2 == 0)
      throw InputError("family1 requires odd p");
    if (family == CHFamily::family2 && (p % 2 != 0 || s % 2 == 0))
      throw InputError("family2 requires even p and odd s");
    triple();  // rejects parameter combinations whose triple degenerates
  }

  i64 e() const { return family == CHFamily::family1 && sign == CHSign::minus ? -1 : 1; }

  BrieskornTriple triple() const {
    i64 ps = checked_mul(p, s);
    if (family == CHFamily::family1)
      return BrieskornTriple(p, checked_add(ps, e()), checked_add(ps, checked_mul(2, e())));
    return BrieskornTriple(p, checked_sub(ps, 1), checked_add(ps, 1));
  }
};

namespace detail {

inline i64 ceil_div(i64 a, i64 b) {  // b > 0
  return a > 0 ? checked_add(checked_sub(a, 1) / b, 1) : a / b;
}

// One increment tau(j+1) - tau(j) of the closed-form ceiling sums.
inline i64 ch_tau_step(const CassonHarerFamily& fam, i64 j) {
  i64 ps = checked_mul(fam.p, fam.s);
  i64 step = checked_add(1, j);
  if (fam.family == CHFamily::family1) {
    i64 e = fam.e();
    step = checked_sub(step, ceil_div(checked_mul(j, checked_sub(fam.p, fam.s)),
                                             checked_mul(2, fam.p)));
    step = checked_sub(step, ceil_div(checked_mul(j, fam.s), checked_add(ps, e)));
    step = checked_sub(step,
                       ceil_div(checked_mul(j, checked_add(checked_sub(ps, fam.s),
                                                                  checked_mul(2, e))),
                                       checked_add(checked_mul(2, ps), checked_mul(4, e))));
  } else {
    step = checked_sub(step, ceil_div(j, fam.p));
    step = checked_sub(step, ceil_div(checked_mul(j, checked_sub(checked_sub(ps, fam.s), 1)),
                                             checked_sub(checked_mul(2, ps), 2)));
    step = checked_sub(step, ceil_div(checked_mul(j, checked_add(checked_sub(ps, fam.s), 1)),
                                             checked_add(checked_mul(2, ps), 2)));
  }
  return step;
}

}  // namespace detail

// tau(n) by the closed-form sum; tau(0) = 0.
inline i64 tau_casson_harer(const CassonHarerFamily& fam, i64 n) {
  if (n < 0) throw InputError("tau_casson_harer: n must be >= 0");
  i64 tau = 0;
  for (i64 j = 0; j < n; ++j) tau = checked_add(tau, detail::ch_tau_step(fam, j));
  return tau;
}

// The closed-form sequence tau(0..i0) with the engine's stopping rule
// (first value 2), for cross-validation against the graph pipeline.
inline std::vector<i64> tau_casson_harer_sequence(const CassonHarerFamily& fam,
                                                  i64 budget = 1000000) {
  std::vector<i64> tau{0};
  for (i64 j = 0; static_cast<i64>(tau.size()) <= budget; ++j) {
    tau.push_back(checked_add(tau.back(), detail::ch_tau_step(fam, j)));
    if (tau.back() == 2) return tau;
  }
  throw BudgetError("closed-form tau did not reach 2 within budget");
}

// rank HF_red = -lambda from the closed forms; integral for all valid
// parameters, and checked to be so.
inline i64 rank_casson_harer(const CassonHarerFamily& fam) {
  i64 num;
  if (fam.family == CHFamily::family1) {
    i64 ps3e = checked_add(checked_mul(fam.p, fam.s), checked_mul(3, fam.e()));
    num = checked_mul(checked_mul(fam.s, checked_sub(checked_mul(fam.p, fam.p), 1)), ps3e);
  } else {
    i64 p2m1 = checked_sub(checked_mul(fam.p, fam.p), 1);
    num = checked_mul(fam.p, checked_sub(checked_mul(p2m1, checked_mul(fam.s, fam.s)), 3));
  }
  if (num % 24 != 0)
    throw Error("internal consistency: closed-form rank is not an integer for these parameters");
  return num / 24;
}

}  // namespace plumbhf
