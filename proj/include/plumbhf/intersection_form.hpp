#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace plumbhf {

// Element of the homology lattice: integer coefficients over dense vertex indices.
using Cycle = std::vector<i64>;

// Symmetric intersection matrix: weights on the diagonal, 1 per edge.
// Also constructible from a raw symmetric matrix so the exact linear
// algebra can be exercised on inputs that no plumbing graph produces.
class IntersectionForm {
 public:
  explicit IntersectionForm(const PlumbingGraph& g) : n_(g.size()) {
    m_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) m_[idx(i, i)] = g.weight(i);
    for (auto [a, b] : g.edges()) {
      m_[idx(a, b)] = 1;
      m_[idx(b, a)] = 1;
    }
  }

  explicit IntersectionForm(const std::vector<std::vector<i64>>& rows)
      : n_(static_cast<int>(rows.size())) {
    if (n_ == 0) throw InputError("empty matrix");
    m_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n_)
        throw InputError("matrix is not square");
      for (int j = 0; j < n_; ++j) m_[idx(i, j)] = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (m_[idx(i, j)] != m_[idx(j, i)]) throw InputError("matrix is not symmetric");
  }

  int size() const { return n_; }
  i64 at(int i, int j) const { return m_[idx(i, j)]; }

  // a^T M b. Bilinear and symmetric by construction.
  i64 pairing(const Cycle& a, const Cycle& b) const {
    if (static_cast<int>(a.size()) != n_ || static_cast<int>(b.size()) != n_)
      throw InputError("cycle length does not match the form's dimension");
    i64 total = 0;
    for (int i = 0; i < n_; ++i) {
      if (a[static_cast<std::size_t>(i)] == 0) continue;
      i64 row = 0;
      for (int j = 0; j < n_; ++j)
        row = checked_add(row, checked_mul(m_[idx(i, j)], b[static_cast<std::size_t>(j)]));
      total = checked_add(total, checked_mul(a[static_cast<std::size_t>(i)], row));
    }
    return total;
  }

  // Exact determinant by Bareiss' fraction-free elimination (row swaps
  // tracked by sign; a fully zero pivot column means det = 0).
  i64 determinant() const {
    std::vector<i64> a = m_;
    i64 sign = 1;
    i64 prev = 1;
    for (int k = 0; k + 1 < n_; ++k) {
      if (a[idx(k, k)] == 0) {
        int p = -1;
        for (int i = k + 1; i < n_; ++i)
          if (a[idx(i, k)] != 0) {
            p = i;
            break;
          }
        if (p < 0) return 0;
        for (int j = 0; j < n_; ++j) std::swap(a[idx(k, j)], a[idx(p, j)]);
        sign = -sign;
      }
      eliminate(a, k, prev);
      prev = a[idx(k, k)];
    }
    return checked_mul(sign, a[idx(n_ - 1, n_ - 1)]);
  }

  // Exact Sylvester test: after k Bareiss steps without pivoting the pivot
  // equals the k-th leading principal minor, so negative definiteness is
  // minors alternating in sign starting negative; a zero pivot disqualifies.
  bool is_negative_definite() const {
    std::vector<i64> a = m_;
    i64 prev = 1;
    for (int k = 0; k < n_; ++k) {
      i64 minor = a[idx(k, k)];
      if (minor == 0) return false;
      if (k % 2 == 0 ? minor > 0 : minor < 0) return false;
      if (k + 1 == n_) break;
      eliminate(a, k, prev);
      prev = minor;
    }
    return true;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  // One Bareiss step: condensation of the trailing block by pivot (k,k).
  void eliminate(std::vector<i64>& a, int k, i64 prev) const {
    i64 piv = a[idx(k, k)];
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j) {
        i64 t = checked_sub(checked_mul(a[idx(i, j)], piv), checked_mul(a[idx(i, k)], a[idx(k, j)]));
        a[idx(i, j)] = t / prev;  // exact division, Bareiss' identity
      }
      a[idx(i, k)] = 0;
    }
  }

  int n_;
  std::vector<i64> m_;  // row-major
};

}  // namespace plumbhf
