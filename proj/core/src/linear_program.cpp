#include "newton/linear_program.hpp"

#include <cstddef>
#include <stdexcept>

namespace newton {

namespace {

// Full-tableau simplex state. Row i of `rows` is B^{-1}A with its
// right-hand side in the last slot; `zrow` holds reduced costs with
// -(objective value) in the last slot.
struct Tableau {
  std::size_t m, ncols;
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> zrow;
  std::vector<std::size_t> basis;
  std::size_t allowed;  // columns < allowed may enter the basis

  void pivot(std::size_t r, std::size_t c) {
    Rat piv = rows[r][c];
    if (piv != 1)
      for (Rat& v : rows[r])
        if (v != 0) v /= piv;
    const std::vector<Rat>& prow = rows[r];
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (prow[j] != 0) rows[i][j] -= f * prow[j];
    }
    if (zrow[c] != 0) {
      Rat f = zrow[c];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (prow[j] != 0) zrow[j] -= f * prow[j];
    }
    basis[r] = c;
  }

  // Bland: entering = least eligible index with negative reduced cost;
  // leaving = least basis index among the minimal-ratio rows.
  LpStatus run() {
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < allowed; ++j)
        if (zrow[j] < 0) {
          enter = j;
          break;
        }
      if (enter == ncols) return LpStatus::Optimal;
      std::size_t leave = m;
      Rat best;
      for (std::size_t i = 0; i < m; ++i) {
        if (rows[i][enter] <= 0) continue;
        Rat ratio = rows[i][ncols] / rows[i][enter];
        if (leave == m || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  void set_costs(const std::vector<Rat>& costs) {
    zrow.assign(ncols + 1, Rat(0));
    for (std::size_t j = 0; j < costs.size(); ++j) zrow[j] = costs[j];
    for (std::size_t i = 0; i < m; ++i) {
      const Rat& cb = costs[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= ncols; ++j) zrow[j] -= cb * rows[i][j];
    }
  }
};

}  // namespace

static LpResult solve_impl(std::vector<std::vector<Rat>>& A,
                           std::vector<Rat>& b, const std::vector<Rat>* c) {
  const std::size_t m = A.size();
  const std::size_t k = m == 0 ? 0 : A[0].size();
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != k) throw std::invalid_argument("ragged LP matrix");
    if (b[i] < 0) {
      for (Rat& v : A[i]) v = -v;
      b[i] = -b[i];
    }
  }

  Tableau t;
  t.m = m;
  t.ncols = k + m;
  t.allowed = t.ncols;
  t.rows.assign(m, std::vector<Rat>(t.ncols + 1, Rat(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) t.rows[i][j] = A[i][j];
    t.rows[i][k + i] = 1;
    t.rows[i][t.ncols] = b[i];
    t.basis[i] = k + i;
  }

  std::vector<Rat> phase1(t.ncols, Rat(0));
  for (std::size_t j = k; j < t.ncols; ++j) phase1[j] = 1;
  t.set_costs(phase1);
  t.run();  // phase one cannot be unbounded: objective >= 0
  if (-t.zrow[t.ncols] != 0) return {LpStatus::Infeasible, Rat(0), {}};

  // Drive leftover artificials out of the basis; an all-zero row over
  // the structural columns is a redundant constraint and is dropped.
  for (std::size_t i = 0; i < t.m;) {
    if (t.basis[i] < k) {
      ++i;
      continue;
    }
    std::size_t c2 = k;
    for (std::size_t j = 0; j < k; ++j)
      if (t.rows[i][j] != 0) {
        c2 = j;
        break;
      }
    if (c2 < k) {
      t.pivot(i, c2);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      --t.m;
    }
  }
  t.m = t.rows.size();

  if (!c) return {LpStatus::Optimal, Rat(0), {}};

  t.allowed = k;
  std::vector<Rat> phase2(t.ncols, Rat(0));
  for (std::size_t j = 0; j < k; ++j) phase2[j] = (*c)[j];
  t.set_costs(phase2);
  if (t.run() == LpStatus::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};

  LpResult res;
  res.status = LpStatus::Optimal;
  res.objective = -t.zrow[t.ncols];
  res.solution.assign(k, Rat(0));
  for (std::size_t i = 0; i < t.m; ++i)
    if (t.basis[i] < k) res.solution[t.basis[i]] = t.rows[i][t.ncols];
  return res;
}

LpResult solve_lp(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                  std::vector<Rat> c) {
  if (A.size() != b.size()) throw std::invalid_argument("LP shape mismatch");
  if (!A.empty() && A[0].size() != c.size())
    throw std::invalid_argument("LP shape mismatch");
  return solve_impl(A, b, &c);
}

bool lp_feasible(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  if (A.size() != b.size()) throw std::invalid_argument("LP shape mismatch");
  return solve_impl(A, b, nullptr).status == LpStatus::Optimal;
}

}  // namespace newton
