#include "newton/lengths.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "newton/errors.hpp"

namespace newton {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Height table over the prefix box (all axes except the last).
struct HeightTable {
  std::vector<std::int64_t> sizes;    // prefix box extents
  std::vector<std::int64_t> strides;  // row-major strides
  std::int64_t cells = 1;
  std::vector<std::int64_t> z;

  std::int64_t sum() const {
    std::int64_t total = 0;
    for (std::int64_t v : z) total += v;
    return total;
  }
};

// One multiplication step by the ideal with the given generators
// (split into prefix part and height): z'[x] = min_g z[x - g.prefix] + g.h.
void step_ideal(HeightTable& t, const std::vector<std::vector<std::int64_t>>& prefixes,
                const std::vector<std::int64_t>& heights) {
  std::vector<std::int64_t> out(t.z.size(), kInf);
  const std::size_t na = t.sizes.size();
  for (std::size_t gi = 0; gi < prefixes.size(); ++gi) {
    const auto& gp = prefixes[gi];
    const std::int64_t gh = heights[gi];
    std::int64_t base = 0;
    bool fits = true;
    std::vector<std::int64_t> lim(na);
    for (std::size_t a = 0; a < na; ++a) {
      lim[a] = t.sizes[a] - gp[a];
      if (lim[a] <= 0) fits = false;
      base += gp[a] * t.strides[a];
    }
    if (!fits) continue;
    std::vector<std::int64_t> cnt(na, 0);
    std::int64_t src = 0;
    for (;;) {
      std::int64_t v = t.z[src] + gh;
      std::int64_t& o = out[src + base];
      if (v < o) o = v;
      std::size_t a = 0;
      for (; a < na; ++a) {
        src += t.strides[a];
        if (++cnt[a] < lim[a]) break;
        src -= lim[a] * t.strides[a];
        cnt[a] = 0;
      }
      if (a == na) break;
    }
  }
  t.z.swap(out);
}

// One multiplication step by the maximal ideal:
// z'[x] = min(z[x] + 1, min over axes a with x_a >= 1 of z[x - e_a]).
// Axis 0 has stride 1, so advancing the linear index by one matches one
// odometer tick of the coordinate counters.
void step_maximal(HeightTable& t) {
  std::vector<std::int64_t> out(t.z.size());
  const std::size_t na = t.sizes.size();
  std::vector<std::int64_t> cnt(na, 0);
  for (std::int64_t idx = 0; idx < t.cells; ++idx) {
    std::int64_t v = t.z[idx] >= kInf ? kInf : t.z[idx] + 1;
    for (std::size_t a = 0; a < na; ++a)
      if (cnt[a] >= 1) {
        std::int64_t w = t.z[idx - t.strides[a]];
        if (w < v) v = w;
      }
    out[idx] = v;
    for (std::size_t a = 0; a < na; ++a) {
      if (++cnt[a] < t.sizes[a]) break;
      cnt[a] = 0;
    }
  }
  t.z.swap(out);
}

}  // namespace

PowerLengthTable::PowerLengthTable(const MonomialIdeal& I, int r_lo, int r_hi,
                                   int s_lo, int s_hi,
                                   std::int64_t cell_budget)
    : r_lo_(r_lo), r_hi_(r_hi), s_lo_(s_lo), s_hi_(s_hi) {
  if (!is_m_primary(I))
    throw std::invalid_argument("PowerLengthTable requires an m-primary ideal");
  if (r_lo < 0 || s_lo < 0 || r_hi < r_lo || s_hi < s_lo)
    throw std::invalid_argument("bad exponent rectangle");

  const std::size_t n = I.dim();
  const std::size_t na = n - 1;

  std::vector<std::int64_t> pure(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int p = *pure_power_exponent(I, i);
    if (p > 1'000'000) throw BudgetError("pure power too large", 0);
    pure[i] = static_cast<std::int64_t>(p);
  }

  HeightTable t;
  t.sizes.resize(na);
  t.strides.resize(na);
  for (std::size_t a = 0; a < na; ++a) {
    t.sizes[a] = std::max<std::int64_t>(1, r_hi * pure[a] + s_hi);
    t.strides[a] = t.cells;
    if (t.cells > cell_budget / t.sizes[a])
      throw BudgetError("length table exceeds cell budget", 0);
    t.cells *= t.sizes[a];
  }
  t.z.assign(static_cast<std::size_t>(t.cells), 0);

  std::vector<std::vector<std::int64_t>> prefixes;
  std::vector<std::int64_t> heights;
  for (const ExpVec& g : I.gens()) {
    std::vector<std::int64_t> gp(na);
    for (std::size_t a = 0; a < na; ++a)
      gp[a] = static_cast<std::int64_t>(g[a]);
    prefixes.push_back(std::move(gp));
    heights.push_back(static_cast<std::int64_t>(g[na]));
  }

  values_.assign(static_cast<std::size_t>(r_hi - r_lo + 1) *
                     static_cast<std::size_t>(s_hi - s_lo + 1),
                 0);
  auto record = [&](int r, const HeightTable& tr) {
    // applies s_hi m-steps to a copy, recording requested s values
    HeightTable ts = tr;
    for (int s = 0; s <= s_hi; ++s) {
      if (s > 0) step_maximal(ts);
      if (s >= s_lo)
        values_[static_cast<std::size_t>(r - r_lo_) *
                    static_cast<std::size_t>(s_hi_ - s_lo_ + 1) +
                static_cast<std::size_t>(s - s_lo_)] = ts.sum();
    }
  };

  if (r_lo == 0) record(0, t);
  for (int r = 1; r <= r_hi; ++r) {
    step_ideal(t, prefixes, heights);
    if (r >= r_lo) record(r, t);
  }
}

Int PowerLengthTable::length(int r, int s) const {
  if (r < r_lo_ || r > r_hi_ || s < s_lo_ || s > s_hi_)
    throw std::out_of_range("length query outside constructed rectangle");
  return Int(values_[static_cast<std::size_t>(r - r_lo_) *
                         static_cast<std::size_t>(s_hi_ - s_lo_ + 1) +
                     static_cast<std::size_t>(s - s_lo_)]);
}

}  // namespace newton
