#pragma once

// Brute-force membership oracle used to cross-check the double description
// engine: decides x in cone(gens) by writing x = sum_i t_i g_i, t_i >= 0,
// substituting the equality part away by exact Gaussian elimination, and
// running Fourier-Motzkin elimination on the remaining sign constraints.
// Test-only.

#include <algorithm>
#include <map>

#include "sphex/linalg.hpp"

namespace sphex::testing {

namespace detail {

// rows are (c | b) meaning c.t <= b; keep one row per primitive coefficient
// vector, with the tightest bound
inline void tighten(std::vector<QVec>& rows) {
  std::map<QVec, Rat> best;
  for (QVec& r : rows) {
    QVec c(r.begin(), r.end() - 1);
    Rat b = r.back();
    QVec cp = primitive(c);
    if (!is_zero(cp)) {
      int j = 0;
      while (c[j] == 0) j++;
      b *= cp[j] / c[j];
    }
    auto it = best.find(cp);
    if (it == best.end())
      best.emplace(std::move(cp), b);
    else if (b < it->second)
      it->second = b;
  }
  rows.clear();
  for (auto& [c, b] : best) {
    QVec r = c;
    r.push_back(b);
    rows.push_back(std::move(r));
  }
}

// feasibility of { rows : c.t <= b } by eliminating all variables
inline bool fm_feasible(std::vector<QVec> rows, int vars) {
  std::vector<bool> eliminated(vars, false);
  for (int round = 0; round < vars; round++) {
    tighten(rows);
    int bestk = -1;
    long best_cost = -1;
    for (int k = 0; k < vars; k++) {
      if (eliminated[k]) continue;
      long pos = 0, neg = 0;
      for (const QVec& r : rows) {
        if (r[k] > 0) pos++;
        if (r[k] < 0) neg++;
      }
      long cost = pos * neg;
      if (bestk < 0 || cost < best_cost) {
        bestk = k;
        best_cost = cost;
      }
    }
    int k = bestk;
    eliminated[k] = true;
    std::vector<QVec> pos, neg, zero;
    for (QVec& r : rows) {
      if (r[k] > 0)
        pos.push_back(std::move(r));
      else if (r[k] < 0)
        neg.push_back(std::move(r));
      else
        zero.push_back(std::move(r));
    }
    rows = std::move(zero);
    for (const QVec& p : pos)
      for (const QVec& q : neg) {
        QVec r(vars + 1, Rat(0));
        for (int j = 0; j <= vars; j++) r[j] = p[j] * (-q[k]) + q[j] * p[k];
        bool constant = true;
        for (int j = 0; j < vars; j++)
          if (r[j] != 0) constant = false;
        if (constant) {
          if (r[vars] < 0) return false;  // 0 <= negative constant
          continue;
        }
        rows.push_back(std::move(r));
      }
  }
  for (const QVec& r : rows)
    if (r[vars] < 0) return false;
  return true;
}

}  // namespace detail

inline bool fm_member(const QVec& x, const std::vector<QVec>& gens) {
  int m = static_cast<int>(gens.size());
  int n = static_cast<int>(x.size());
  if (m == 0) return is_zero(x);

  // equalities [G | x] with G[j][i] = gens[i][j]
  QMatrix aug(n, m + 1);
  for (int j = 0; j < n; j++) {
    for (int i = 0; i < m; i++) aug.at(j, i) = gens[i][j];
    aug.at(j, m) = x[j];
  }
  QMatrix r = rref(aug);
  std::vector<int> pivot_of_row;
  for (int i = 0; i < r.rows(); i++) {
    int j = 0;
    while (j <= m && r.at(i, j) == 0) j++;
    if (j > m) break;
    if (j == m) return false;  // inconsistent: x not in the span
    pivot_of_row.push_back(j);
  }
  std::vector<bool> is_pivot(m, false);
  for (int j : pivot_of_row) is_pivot[j] = true;
  std::vector<int> free_vars;
  for (int j = 0; j < m; j++)
    if (!is_pivot[j]) free_vars.push_back(j);
  int f = static_cast<int>(free_vars.size());

  // t_pivot(i) = rhs_i - sum_j R[i][free_j] * s_j  must be >= 0, and s_j >= 0
  std::vector<QVec> rows;
  for (size_t i = 0; i < pivot_of_row.size(); i++) {
    QVec row(f + 1, Rat(0));
    for (int j = 0; j < f; j++) row[j] = r.at(static_cast<int>(i), free_vars[j]);
    row[f] = r.at(static_cast<int>(i), m);
    rows.push_back(std::move(row));
  }
  for (int j = 0; j < f; j++) {
    QVec row(f + 1, Rat(0));
    row[j] = -1;
    rows.push_back(std::move(row));
  }
  return detail::fm_feasible(std::move(rows), f);
}

}  // namespace sphex::testing
