#include "newton/multiplicities.hpp"

#include <stdexcept>

#include "newton/errors.hpp"
#include "newton/lengths.hpp"

namespace newton {

namespace {

Int binomial(int n, int k) {
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Mixed forward difference of order (j in r, i in s) of the colength
// grid at base (r0, s0).
Int mixed_difference(const PowerLengthTable& L, int j, int i, int r0, int s0) {
  Int acc = 0;
  for (int a = 0; a <= j; ++a)
    for (int b = 0; b <= i; ++b) {
      Int term = binomial(j, a) * binomial(i, b) * L.length(r0 + a, s0 + b);
      if ((j - a + i - b) % 2 == 1) term = -term;
      acc += term;
    }
  return acc;
}

int default_start(const MonomialIdeal& I, const GridOptions& opts) {
  if (opts.start >= 0) return opts.start;
  Int d = I.max_degree() * static_cast<int>(I.dim());
  return static_cast<int>(d);
}

}  // namespace

Int hilbert_samuel(const MonomialIdeal& I, const GridOptions& opts) {
  if (!is_m_primary(I))
    throw std::invalid_argument("hilbert_samuel requires an m-primary ideal");
  const int n = static_cast<int>(I.dim());
  int t0 = std::max(1, default_start(I, opts));
  for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
    PowerLengthTable L(I, t0, t0 + n + 1, 0, 0, opts.cell_budget);
    Int d1 = mixed_difference(L, n, 0, t0, 0);
    Int d2 = mixed_difference(L, n, 0, t0 + 1, 0);
    if (d1 == d2 && d1 > 0) return d1;
    t0 = 2 * t0 + 1;
  }
  throw StabilizationError("hilbert_samuel: differences did not stabilize");
}

std::vector<Int> mixed_multiplicities(const MonomialIdeal& I,
                                      const GridOptions& opts) {
  if (!is_m_primary(I))
    throw std::invalid_argument("mixed_multiplicities requires an m-primary ideal");
  const int n = static_cast<int>(I.dim());
  int r0 = std::max(1, default_start(I, opts));
  for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
    const int s0 = r0;
    PowerLengthTable L(I, r0, r0 + n + 2, s0, s0 + n + 2, opts.cell_budget);

    bool ok = true;
    // On the polynomial regime every difference of total order n+1 is 0.
    for (int a = 0; ok && a <= n + 1; ++a)
      if (mixed_difference(L, a, n + 1 - a, r0, s0) != 0) ok = false;

    std::vector<Int> e(static_cast<std::size_t>(n) + 1);
    for (int j = 0; ok && j <= n; ++j) {
      Int v1 = mixed_difference(L, j, n - j, r0, s0);
      Int v2 = mixed_difference(L, j, n - j, r0 + 1, s0 + 1);
      if (v1 != v2 || v1 <= 0) ok = false;
      e[static_cast<std::size_t>(j)] = v1;
    }
    if (ok && e[0] == 1) return e;
    r0 = 2 * r0 + 1;
  }
  throw StabilizationError("mixed_multiplicities: grid did not stabilize");
}

std::optional<Int> sigma(const MonomialIdeal& I, std::size_t j,
                         const SigmaOptions& opts) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("sigma requires a proper nonzero ideal");
  if (j < 1 || j > I.dim())
    throw std::invalid_argument("sigma index out of range");
  if (static_cast<int>(j) > codimension(I)) return std::nullopt;
  if (is_m_primary(I)) return mixed_multiplicities(I, opts.grid)[j];

  std::optional<Int> prev;
  for (int t = 2; t <= opts.max_t; t *= 2) {
    MonomialIdeal cut = sum(I, maximal_power(I.dim(), t));
    Int val = mixed_multiplicities(cut, opts.grid)[j];
    if (prev && *prev == val) return val;
    prev = val;
  }
  throw StabilizationError("sigma: cutoff doubling did not stabilize");
}

bool minkowski_check(const std::vector<std::optional<Int>>& v) {
  for (std::size_t j = 1; j + 1 < v.size(); ++j) {
    if (!v[j - 1] || !v[j] || !v[j + 1]) continue;
    if (*v[j] * *v[j] > *v[j - 1] * *v[j + 1]) return false;
  }
  return true;
}

bool minkowski_check(const std::vector<Int>& v) {
  std::vector<std::optional<Int>> w(v.begin(), v.end());
  return minkowski_check(w);
}

}  // namespace newton
