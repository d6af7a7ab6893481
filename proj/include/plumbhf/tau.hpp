#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "intersection_form.hpp"
#include "validation.hpp"

namespace plumbhf {

struct TauFunction {
  std::vector<i64> full;     // tau(0..i0), ends at the first value 2
  std::vector<i64> reduced;  // alternating skeleton, see reduce_tau
};

struct EngineOptions {
  i64 step_budget = 10000000;  // total basis-vector additions allowed
  std::optional<int> v0;       // dense index; defaults to distinguished_vertex
  int tail_check_steps = 50;   // confirm tau is non-decreasing past the stop index
};

// Picks the candidate with the lowest vertex id (the engine default).
struct FirstCandidate {
  int operator()(const std::vector<int>& candidates) const { return candidates.front(); }
};

// Generator of the computation sequence x(0)=0, x(1), x(2), ...  Each step
// adds v0 and then restores (y, E_j) <= 0 for all j != v0 by repeatedly
// adding offending basis vectors. The pairing of the running cycle against
// every basis vector is maintained incrementally, so one addition costs
// O(degree) instead of a matrix product.
class ComputationState {
 public:
  ComputationState(const PlumbingGraph& g, int v0, i64 step_budget)
      : g_(&g),
        v0_(v0),
        budget_(step_budget),
        x_(static_cast<std::size_t>(g.size()), 0),
        pair_(static_cast<std::size_t>(g.size()), 0) {
    if (v0 < 0 || v0 >= g.size()) throw InputError("v0 is out of range");
    if (step_budget <= 0) throw InputError("step budget must be positive");
  }

  int v0() const { return v0_; }
  i64 index() const { return i_; }
  const Cycle& x() const { return x_; }
  i64 budget_left() const { return budget_; }

  // (x(i), E_v0), used by the tau recurrence.
  i64 pairing_v0() const { return pair_[static_cast<std::size_t>(v0_)]; }

  // Advance x(i) -> x(i+1). The chooser resolves the "any offending j"
  // freedom in the restoration loop; endpoint independence across choosers
  // is a tested invariant, not an assumption.
  template <class Chooser>
  const Cycle& advance(Chooser&& pick) {
    add(v0_);
    for (;;) {
      candidates_.clear();
      for (int j = 0; j < g_->size(); ++j)
        if (j != v0_ && pair_[static_cast<std::size_t>(j)] > 0) candidates_.push_back(j);
      if (candidates_.empty()) break;
      add(pick(candidates_));
    }
    ++i_;
    return x_;
  }

  const Cycle& advance() { return advance(FirstCandidate{}); }

 private:
  void add(int v) {
    if (--budget_ < 0)
      throw BudgetError(
          "step budget exhausted: non-terminating input (graph likely not almost-rational or "
          "not negative definite)");
    x_[static_cast<std::size_t>(v)] = checked_add(x_[static_cast<std::size_t>(v)], 1);
    pair_[static_cast<std::size_t>(v)] =
        checked_add(pair_[static_cast<std::size_t>(v)], g_->weight(v));
    for (int w : g_->neighbors(v))
      pair_[static_cast<std::size_t>(w)] = checked_add(pair_[static_cast<std::size_t>(w)], 1);
  }

  const PlumbingGraph* g_;
  int v0_;
  i64 budget_;
  i64 i_ = 0;
  Cycle x_;
  std::vector<i64> pair_;
  std::vector<int> candidates_;
};

inline Cycle next_cycle(ComputationState& state) { return state.advance(); }

// Alternating min/max skeleton of a tau sequence: collapse equal runs, keep
// the first entry and every interior strict extremum, and drop the strictly
// increasing tail (which carries the terminal 2). The result starts at
// tau(0) and ends at the last local minimum.
inline std::vector<i64> reduce_tau(const std::vector<i64>& full) {
  if (full.empty()) throw InputError("reduce_tau: empty sequence");
  std::vector<i64> d;
  for (i64 v : full)
    if (d.empty() || d.back() != v) d.push_back(v);
  if (d.size() == 1) return d;
  std::vector<i64> out{d.front()};
  for (std::size_t k = 1; k + 1 < d.size(); ++k) {
    bool up_before = d[k] > d[k - 1];
    bool up_after = d[k + 1] > d[k];
    if (up_before != up_after) out.push_back(d[k]);
  }
  if (d.back() < d[d.size() - 2]) out.push_back(d.back());
  return out;
}

inline int resolve_v0(const PlumbingGraph& g, const EngineOptions& opt) {
  if (opt.v0) {
    if (*opt.v0 < 0 || *opt.v0 >= g.size())
      throw InputError("v0 override " + std::to_string(*opt.v0) + " is out of range");
    return *opt.v0;
  }
  auto v0 = distinguished_vertex(g);
  if (!v0)
    throw InputError(
        "no distinguished vertex: no unique v with |m(v)| < degree(v); supply one explicitly");
  return *v0;
}

// Full tau computation with the first-value-2 stopping rule (stop at the
// first index with tau = 2) plus a bounded safety re-check that tau stays
// non-decreasing afterwards. `trace`, when given, receives x(1), x(2), ... including the
// tail-check steps.
template <class Chooser>
TauFunction compute_tau_with(const PlumbingGraph& g, EngineOptions opt, Chooser&& pick,
                             std::vector<Cycle>* trace = nullptr) {
  if (!g.is_tree())
    throw InputError("graph is not a tree: the engine requires a connected acyclic graph");
  IntersectionForm form(g);
  if (!form.is_negative_definite())
    throw InputError("intersection form is not negative definite");
  i64 det = form.determinant();
  if (det != 1 && det != -1)
    throw InputError("not an integral homology sphere: |det| = " + std::to_string(det < 0 ? -det : det) +
                     ", expected 1");
  int v0 = resolve_v0(g, opt);

  ComputationState state(g, v0, opt.step_budget);
  TauFunction tau;
  tau.full.push_back(0);
  for (;;) {
    i64 next = checked_add(tau.full.back(), checked_sub(1, state.pairing_v0()));
    state.advance(pick);
    if (trace) trace->push_back(state.x());
    tau.full.push_back(next);
    if (next == 2) break;
  }

  i64 prev = 2;
  for (int k = 0; k < opt.tail_check_steps; ++k) {
    i64 next = checked_add(prev, checked_sub(1, state.pairing_v0()));
    state.advance(pick);
    if (trace) trace->push_back(state.x());
    if (next < prev)
      throw InputError(
          "tau decreased after reaching 2: the input is outside the algorithm's guarantees "
          "(graph not almost-rational?)");
    prev = next;
  }

  tau.reduced = reduce_tau(tau.full);
  return tau;
}

inline TauFunction compute_tau(const PlumbingGraph& g, EngineOptions opt = {}) {
  return compute_tau_with(g, opt, FirstCandidate{});
}

}  // namespace plumbhf
