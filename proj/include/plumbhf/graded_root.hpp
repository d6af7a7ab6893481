#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"

namespace plumbhf {

// Merge tree built from a reduced tau sequence: even entries are leaf
// values (local minima), odd entries are merge values (local maxima). The
// infinite stem above the final merge is implicit — every graded root has
// it, and renderers truncate it at top()+2.
struct GradedRoot {
  struct Merge {
    i64 value;
    int left, right;  // indices of the adjacent leaves whose branches join here
  };

  std::vector<i64> leaves;
  std::vector<Merge> merges;

  i64 min_leaf() const { return *std::min_element(leaves.begin(), leaves.end()); }

  // chi value at which the root becomes a single stem.
  i64 top() const {
    i64 t = leaves.front();
    for (const Merge& m : merges) t = std::max(t, m.value);
    return t;
  }

  // Connected components of the sub-root at level `chi` (vertices with
  // value <= chi): included leaves minus the merges that already happened.
  i64 components_at(i64 chi) const {
    i64 count = 0;
    for (i64 v : leaves)
      if (v <= chi) ++count;
    for (const Merge& m : merges)
      if (m.value <= chi) --count;
    return count;
  }
};

inline GradedRoot build_root(const std::vector<i64>& reduced) {
  if (reduced.empty()) throw InputError("build_root: empty sequence");
  if (reduced.size() % 2 == 0)
    throw InputError("build_root: reduced tau must have odd length (leaf/merge alternation)");
  GradedRoot root;
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    if (k % 2 == 0) {
      root.leaves.push_back(reduced[k]);
    } else {
      if (reduced[k] <= reduced[k - 1] || reduced[k] <= reduced[k + 1])
        throw InputError("build_root: entry at position " + std::to_string(k) +
                         " must be a strict local maximum");
      root.merges.push_back({reduced[k], static_cast<int>(k / 2), static_cast<int>(k / 2) + 1});
    }
  }
  return root;
}

namespace detail {

// Component representative (smallest leaf index) of each included leaf at
// the given level; -1 for leaves above the level.
inline std::vector<int> component_reps(const GradedRoot& root, i64 chi) {
  const int n = static_cast<int>(root.leaves.size());
  std::vector<int> rep(static_cast<std::size_t>(n));
  std::iota(rep.begin(), rep.end(), 0);
  for (const auto& m : root.merges)
    if (m.value <= chi) {
      // adjacent-interval merges: everything in (rep[left] .. right] collapses left
      int target = rep[static_cast<std::size_t>(m.left)];
      for (int i = target; i <= m.right; ++i) rep[static_cast<std::size_t>(i)] = target;
    }
  for (int i = 0; i < n; ++i) {
    int r = i;
    while (rep[static_cast<std::size_t>(r)] != r) r = rep[static_cast<std::size_t>(r)];
    rep[static_cast<std::size_t>(i)] = root.leaves[static_cast<std::size_t>(r)] <= chi ? r : -1;
  }
  for (int i = 0; i < n; ++i)
    if (root.leaves[static_cast<std::size_t>(i)] > chi) rep[static_cast<std::size_t>(i)] = -1;
  return rep;
}

}  // namespace detail

// DOT rendering in the style of the usual graded-root pictures: one node
// per (branch, level) lattice point from each leaf up to its merge, stem
// truncated two levels above the last merge, node labels = chi.
inline std::string root_to_dot(const GradedRoot& root) {
  std::ostringstream out;
  out << "graph graded_root {\n  rankdir=BT;\n  node [shape=circle, fixedsize=true, width=0.3];\n";
  const i64 lo = root.min_leaf();
  const i64 hi = root.top() + 2;
  auto node = [](i64 chi, int rep) {
    std::ostringstream n;
    n << "\"" << chi << "/" << rep << "\"";
    return n.str();
  };
  for (i64 chi = lo; chi <= hi; ++chi) {
    auto reps = detail::component_reps(root, chi);
    std::vector<int> uniq;
    for (int r : reps)
      if (r >= 0 && (uniq.empty() || uniq.back() != r)) uniq.push_back(r);
    out << "  { rank=same;";
    for (int r : uniq) out << ' ' << node(chi, r) << " [label=\"" << chi << "\"];";
    out << " }\n";
    if (chi > lo) {
      auto below = detail::component_reps(root, chi - 1);
      std::vector<int> uniq_below;
      for (int r : below)
        if (r >= 0 && (uniq_below.empty() || uniq_below.back() != r)) uniq_below.push_back(r);
      for (int r : uniq_below)
        out << "  " << node(chi - 1, r) << " -- " << node(chi, reps[static_cast<std::size_t>(r)])
            << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

// Terminal rendering: one line per level, one mark per branch alive there.
inline std::string root_to_text(const GradedRoot& root) {
  std::ostringstream out;
  const i64 lo = root.min_leaf();
  const i64 hi = root.top() + 2;
  for (i64 chi = hi; chi >= lo; --chi) {
    out.width(6);
    out << chi << " |";
    i64 c = root.components_at(chi);
    for (i64 k = 0; k < c; ++k) out << " o";
    out << '\n';
  }
  return out.str();
}

}  // namespace plumbhf
