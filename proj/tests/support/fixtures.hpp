#pragma once

#include <random>
#include <utility>
#include <vector>

#include <plumbhf/plumbhf.hpp>

namespace fixtures {

using plumbhf::i64;

// Golden reduced tau rows for the Mazur family, n = 1..7 (index 0 unused).
inline const std::vector<std::vector<i64>>& mazur_reduced_rows() {
  static const std::vector<std::vector<i64>> rows = {
      {},
      {0, 1, 0, 1, 0},
      {0, 1, -4, -3, -5, -4, -5, -4, -5, -4, -5, -4, -5, -3, -4, 1, 0},
      {0, 1, -12, -11, -14, -13, -15, -14, -19, -18, -20, -19, -21,
       -19, -21, -20, -21, -20, -21, -20, -21, -20, -21, -19, -21,
       -19, -20, -18, -19, -14, -15, -13, -14, -11, -12, 1, 0},
      {0, 1, -24, -23, -27, -26, -29, -28, -41, -40, -43, -42, -45,
       -43, -46, -45, -47, -46, -51, -50, -52, -51, -53, -51, -54, -52,
       -54, -52, -54, -53, -54, -53, -54, -53, -54, -53, -54, -52, -54,
       -52, -54, -51, -53, -51, -52, -50, -51, -46, -47, -45, -46, -43,
       -45, -42, -43, -40, -41, -28, -29, -26, -27, -23, -24, 1, 0},
      {0, 1, -40, -39, -44, -43, -47, -46, -71, -70, -74, -73, -77, -75,
       -79, -78, -81, -80, -93, -92, -95, -94, -97, -95, -99, -97, -100, -98,
       -101, -100, -102, -101, -106, -105, -107, -106, -108, -106, -109, -107,
       -110, -107, -110, -108, -110, -108, -110, -109, -110, -109, -110, -109,
       -110, -109, -110, -108, -110, -108, -110, -107, -110, -107, -109, -106,
       -108, -106, -107, -105, -106, -101, -102, -100, -101, -98, -100, -97, -99,
       -95, -97, -94, -95, -92, -93, -80, -81, -78, -79, -75, -77, -73, -74, -70,
       -71, -46, -47, -43, -44, -39, -40, 1, 0},
      {0, 1, -60, -59, -65, -64, -69, -68, -109, -108, -113, -112, -117, -115, -120,
       -119, -123, -122, -147, -146, -150, -149, -153, -151, -156, -154, -158, -156,
       -160, -159, -162, -161, -174, -173, -176, -175, -178, -176, -180, -178, -182,
       -179, -183, -181, -184, -182, -185, -184, -186, -185, -190, -189, -191, -190,
       -192, -190, -193, -191, -194, -191, -195, -192, -195, -192, -195, -193, -195,
       -193, -195, -194, -195, -194, -195, -194, -195, -194, -195, -193, -195, -193,
       -195, -192, -195, -192, -195, -191, -194, -191, -193, -190, -192, -190, -191,
       -189, -190, -185, -186, -184, -185, -182, -184, -181, -183, -179, -182, -178,
       -180, -176, -178, -175, -176, -173, -174, -161, -162, -159, -160, -156, -158,
       -154, -156, -151, -153, -149, -150, -146, -147, -122, -123, -119, -120, -115,
       -117, -112, -113, -108, -109, -68, -69, -64, -65, -59, -60, 1, 0},
      {0, 1, -84, -83, -90, -89, -95, -94, -155, -154, -160, -159, -165, -163, -169,
       -168, -173, -172, -213, -212, -217, -216, -221, -219, -225, -223, -228, -226,
       -231, -230, -234, -233, -258, -257, -261, -260, -264, -262, -267, -265, -270,
       -267, -272, -270, -274, -272, -276, -275, -278, -277, -290, -289, -292, -291,
       -294, -292, -296, -294, -298, -295, -300, -297, -301, -298, -302, -300, -303,
       -301, -304, -303, -305, -304, -309, -308, -310, -309, -311, -309, -312, -310,
       -313, -310, -314, -311, -315, -311, -315, -312, -315, -312, -315, -313, -315,
       -313, -315, -314, -315, -314, -315, -314, -315, -314, -315, -313, -315, -313,
       -315, -312, -315, -312, -315, -311, -315, -311, -314, -310, -313, -310, -312,
       -309, -311, -309, -310, -308, -309, -304, -305, -303, -304, -301, -303, -300,
       -302, -298, -301, -297, -300, -295, -298, -294, -296, -292, -294, -291, -292,
       -289, -290, -277, -278, -275, -276, -272, -274, -270, -272, -267, -270, -265,
       -267, -262, -264, -260, -261, -257, -258, -233, -234, -230, -231, -226, -228,
       -223, -225, -219, -221, -216, -217, -212, -213, -172, -173, -168, -169, -163,
       -165, -159, -160, -154, -155, -94, -95, -89, -90, -83, -84, 1, 0},
  };
  return rows;
}

// Frozen oracles: hand-runs of the algorithm recorded as literals.
inline const std::vector<i64>& g1_full_tau() {
  static const std::vector<i64> t = {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                                     1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2};
  return t;
}

inline const std::vector<i64>& sigma237_full_tau() {
  static const std::vector<i64> t = {0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2};
  return t;
}

// Expected HF summand lists in canonical order (bottom degree, then rank).
inline std::vector<plumbhf::Summand> mazur_summands(int n) {
  using S = plumbhf::Summand;
  switch (n) {
    case 1:
      return {S{1, 0}, S{1, 0}};
    case 2:
      return {S{1, 0}, S{1, 0}, S{1, 0}, S{1, 0}, S{1, 2}, S{1, 2}, S{1, 10}, S{1, 10}};
    case 3:
      return {S{1, 0},  S{1, 0},  S{1, 0},  S{1, 0},  S{2, 0},  S{2, 0},
              S{1, 2},  S{1, 2},  S{1, 4},  S{1, 4},  S{1, 12}, S{1, 12},
              S{1, 14}, S{1, 14}, S{1, 18}, S{1, 18}, S{1, 42}, S{1, 42}};
    default:
      return {};
  }
}

// Sigma(2,3,7): center -1 with legs -2, -3, -7 (center first).
inline plumbhf::PlumbingGraph sigma237() {
  return plumbhf::PlumbingGraph::from_weights({-1, -2, -3, -7}, {{0, 1}, {0, 2}, {0, 3}});
}

// Random tree on n vertices with weights in [wlo, whi].
inline plumbhf::PlumbingGraph random_tree(int n, std::mt19937& rng, i64 wlo = -8, i64 whi = -1) {
  std::uniform_int_distribution<i64> weight(wlo, whi);
  std::vector<i64> weights;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    weights.push_back(weight(rng));
    if (v > 0) {
      std::uniform_int_distribution<int> parent(0, v - 1);
      edges.emplace_back(parent(rng), v);
    }
  }
  return plumbhf::PlumbingGraph::from_weights(weights, edges);
}

// Random valid reduced tau: alternating leaf/merge values, odd length,
// starts at 0, values within [-50, 5].
inline std::vector<i64> random_reduced(std::mt19937& rng, int max_len = 41) {
  std::uniform_int_distribution<int> npairs(0, (max_len - 1) / 2);
  std::uniform_int_distribution<i64> leaf(-50, 4);
  int k = npairs(rng);
  std::vector<i64> seq{0};
  for (int i = 0; i < k; ++i) {
    i64 prev_leaf = seq.back();
    i64 next_leaf = leaf(rng);
    std::uniform_int_distribution<i64> merge(std::max(prev_leaf, next_leaf) + 1, 5);
    seq.push_back(merge(rng));
    seq.push_back(next_leaf);
  }
  return seq;
}

// Hilbert function of a decomposed module over even degrees [lo, hi]:
// the tower contributes 1 from its bottom up, a summand (r, d) contributes
// 1 to d, d+2, ..., d+2(r-1).
inline std::map<i64, i64> hilbert_from_module(const plumbhf::HFModule& m, i64 lo, i64 hi) {
  std::map<i64, i64> h;
  for (i64 d = lo; d <= hi; ++d) {
    if ((d - m.tower_bottom) % 2 != 0) continue;
    h[d] = d >= m.tower_bottom ? 1 : 0;
  }
  for (const auto& s : m.summands)
    for (i64 k = 0; k < s.rank; ++k) {
      i64 d = s.bottom_degree + 2 * k;
      if (d >= lo && d <= hi) ++h[d];
    }
  return h;
}

}  // namespace fixtures
