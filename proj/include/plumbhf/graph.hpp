#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"

namespace plumbhf {

// Weighted plumbing graph. Vertices are stored densely (0..n-1, in input
// order); the ids seen in input files are kept alongside so output can
// round-trip them. Construction enforces local well-formedness (simple
// graph, weights <= -1); global properties (tree, definiteness, |det|=1)
// are checked by validate() so that broken inputs can still be reported on.
class PlumbingGraph {
 public:
  // vertices: (original id, weight); edges: pairs of original ids.
  PlumbingGraph(const std::vector<std::pair<i64, i64>>& vertices,
                const std::vector<std::pair<i64, i64>>& edges) {
    if (vertices.empty()) throw InputError("graph has no vertices");
    ids_.reserve(vertices.size());
    weights_.reserve(vertices.size());
    for (const auto& [id, w] : vertices) {
      if (id < 0) throw InputError("vertex id must be non-negative: " + std::to_string(id));
      if (index_of_id(id) >= 0) throw InputError("duplicate vertex id " + std::to_string(id));
      if (w > -1)
        throw InputError("vertex " + std::to_string(id) + " has weight " + std::to_string(w) +
                         "; plumbing weights must be <= -1");
      ids_.push_back(id);
      weights_.push_back(w);
    }
    adj_.assign(ids_.size(), {});
    for (const auto& [a, b] : edges) {
      int ia = index_of_id(a), ib = index_of_id(b);
      if (ia < 0 || ib < 0)
        throw InputError("edge endpoint " + std::to_string(ia < 0 ? a : b) +
                         " is not a declared vertex");
      if (ia == ib) throw InputError("self-loop at vertex " + std::to_string(a));
      auto e = std::minmax(ia, ib);
      std::pair<int, int> key{e.first, e.second};
      if (std::find(edges_.begin(), edges_.end(), key) != edges_.end())
        throw InputError("repeated edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
      edges_.push_back(key);
      adj_[ia].push_back(ib);
      adj_[ib].push_back(ia);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  // Convenience: ids are 0..n-1 and edges are dense index pairs.
  static PlumbingGraph from_weights(const std::vector<i64>& weights,
                                    const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<i64, i64>> vs;
    vs.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) vs.emplace_back(static_cast<i64>(i), weights[i]);
    std::vector<std::pair<i64, i64>> es;
    es.reserve(edges.size());
    for (auto [a, b] : edges) es.emplace_back(a, b);
    return PlumbingGraph(vs, es);
  }

  int size() const { return static_cast<int>(weights_.size()); }
  i64 weight(int v) const { return weights_[static_cast<std::size_t>(v)]; }
  i64 original_id(int v) const { return ids_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Dense index for an original id, -1 if absent.
  int index_of_id(i64 id) const {
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (ids_[i] == id) return static_cast<int>(i);
    return -1;
  }

  bool is_connected() const {
    std::vector<char> seen(weights_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : neighbors(v))
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    return reached == weights_.size();
  }

  bool is_tree() const {
    return edges_.size() + 1 == weights_.size() && is_connected();
  }

 private:
  std::vector<i64> ids_, weights_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace plumbhf
