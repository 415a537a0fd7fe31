#include "newton/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "newton/errors.hpp"
#include "newton/linear_program.hpp"

namespace newton {

// Constraint block shared by member() and mu(): rows 0..n-1 say
// sum_i lambda_i g_i[j] + slack_j = target_j, row n says sum lambda = 1.
static void convexity_rows(const MonomialIdeal& I,
                           std::vector<std::vector<Rat>>& A,
                           std::size_t extra_cols) {
  const std::size_t n = I.dim();
  const std::size_t k = I.gens().size();
  A.assign(n + 1, std::vector<Rat>(k + extra_cols + n, Rat(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) A[j][i] = Rat(I.gens()[i][j]);
    A[n][i] = 1;
  }
  for (std::size_t j = 0; j < n; ++j) A[j][k + extra_cols + j] = 1;
}

bool member(const NewtonPolytope& P, const RatPoint& p) {
  const MonomialIdeal& I = P.ideal();
  if (p.size() != I.dim())
    throw std::invalid_argument("point dimension mismatch");
  for (const Rat& c : p)
    if (c < 0) throw std::invalid_argument("point has a negative coordinate");
  if (I.is_zero()) return false;

  // Fast path: divisibility by a generator certifies membership.
  for (const ExpVec& g : I.gens()) {
    bool leq = true;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (Rat(g[j]) > p[j]) {
        leq = false;
        break;
      }
    if (leq) return true;
  }

  std::vector<std::vector<Rat>> A;
  convexity_rows(I, A, 0);
  std::vector<Rat> b(p);
  b.push_back(Rat(1));
  return lp_feasible(std::move(A), std::move(b));
}

Rat mu(const NewtonPolytope& P) {
  const MonomialIdeal& I = P.ideal();
  if (I.is_zero())
    throw std::invalid_argument("mu of the zero ideal is infinite");
  const std::size_t n = I.dim();
  const std::size_t k = I.gens().size();

  // Variables: lambda_1..lambda_k, t, slack_1..slack_n.
  // Row j: sum_i g_i[j] lambda_i - t + s_j = 0;  row n: sum lambda = 1.
  std::vector<std::vector<Rat>> A;
  convexity_rows(I, A, 1);
  for (std::size_t j = 0; j < n; ++j) A[j][k] = -1;
  std::vector<Rat> b(n, Rat(0));
  b.push_back(Rat(1));
  std::vector<Rat> c(k + 1 + n, Rat(0));
  c[k] = 1;

  LpResult r = solve_lp(std::move(A), std::move(b), std::move(c));
  if (r.status != LpStatus::Optimal)
    throw std::logic_error("diagonal LP must have an optimum");
  return r.objective;
}

MonomialIdeal integral_closure(const MonomialIdeal& I) {
  if (I.is_zero())
    throw std::invalid_argument("integral closure of the zero ideal");
  const std::size_t n = I.dim();
  NewtonPolytope P(I);

  ExpVec bound(n, 0);
  for (const ExpVec& g : I.gens())
    for (std::size_t j = 0; j < n; ++j) bound[j] = std::max(bound[j], g[j]);

  Int cells = 1;
  for (const Int& b : bound) cells *= (b + 1);
  if (cells > 2'000'000)
    throw BudgetError("integral_closure lattice box too large", 0);

  // Enumerate box points in increasing total degree: a point divisible
  // by an already-kept point is in the generated ideal and not minimal.
  std::vector<ExpVec> points;
  ExpVec u(n, 0);
  for (;;) {
    points.push_back(u);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++u[i] <= bound[i]) break;
      u[i] = 0;
    }
    if (i == n) break;
  }
  std::sort(points.begin(), points.end(), [](const ExpVec& a, const ExpVec& b) {
    Int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  });

  std::vector<ExpVec> kept;
  for (const ExpVec& pt : points) {
    bool dominated = false;
    for (const ExpVec& g : kept)
      if (divides(g, pt)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    RatPoint q(n);
    for (std::size_t j = 0; j < n; ++j) q[j] = Rat(pt[j]);
    if (member(P, q)) kept.push_back(pt);
  }
  return MonomialIdeal(n, std::move(kept));
}

bool simplex_region_equals(const MonomialIdeal& I, const std::vector<Rat>& a) {
  if (a.size() != I.dim()) throw std::invalid_argument("dimension mismatch");
  for (const Rat& aj : a)
    if (aj <= 0) throw std::invalid_argument("simplex intercepts must be positive");
  if (!is_m_primary(I))
    throw std::invalid_argument("simplex_region_equals requires an m-primary ideal");

  for (const ExpVec& g : I.gens()) {
    Rat s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s += Rat(g[j]) / a[j];
    if (s < 1) return false;
  }
  NewtonPolytope P(I);
  for (std::size_t j = 0; j < a.size(); ++j) {
    RatPoint vertex(a.size(), Rat(0));
    vertex[j] = a[j];
    if (!member(P, vertex)) return false;
  }
  return true;
}

}  // namespace newton
