#include "newton/thresholds.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "newton/errors.hpp"
#include "newton/polytope.hpp"

namespace newton {

Rat lct_monomial(const MonomialIdeal& I) {
  if (!I.is_proper())
    throw std::invalid_argument("lct is defined for proper nonzero ideals");
  return Rat(1) / mu(NewtonPolytope(I));
}

namespace {

using State = std::vector<std::int64_t>;

struct StateHash {
  std::size_t operator()(const State& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<State> to_i64(const std::vector<ExpVec>& gens) {
  std::vector<State> out;
  out.reserve(gens.size());
  for (const ExpVec& g : gens) {
    State v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      v[i] = static_cast<std::int64_t>(g[i]);
    out.push_back(std::move(v));
  }
  return out;
}

bool divisible_by_any(const State& u, const std::vector<State>& gens) {
  for (const State& g : gens) {
    bool leq = true;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (g[i] > u[i]) {
        leq = false;
        break;
      }
    if (leq) return true;
  }
  return false;
}

}  // namespace

Int nu_monomial(const MonomialIdeal& I, const MonomialIdeal& J, const Int& q,
                const NuOptions& opts) {
  if (q < 2) throw std::invalid_argument("nu requires q >= 2");
  if (!is_m_primary(J)) throw std::invalid_argument("nu requires m-primary J");
  if (!ideal_contains(radical(J), I))
    throw std::invalid_argument("nu is unbounded: I is not inside the radical of J");

  const std::size_t n = I.dim();
  std::vector<State> gens = to_i64(I.gens());
  std::vector<State> frob = to_i64(frobenius_power(J, q).gens());

  // Lattice points outside J^[q] have coordinate i below q * (pure power
  // of J in variable i); everything explored fits in that box.
  std::unordered_map<State, std::int64_t, StateHash> longest;
  State origin(n, 0);
  longest.emplace(origin, 0);

  std::vector<State> frontier{origin};
  std::int64_t level = 0;
  while (!frontier.empty()) {
    std::vector<State> next;
    for (const State& u : frontier) {
      for (const State& g : gens) {
        State w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = u[i] + g[i];
        if (divisible_by_any(w, frob)) continue;
        if (longest.emplace(w, 0).second) next.push_back(std::move(w));
      }
    }
    if (static_cast<std::int64_t>(longest.size()) > opts.max_states)
      throw BudgetError("nu state budget exceeded", level);
    frontier.swap(next);
    ++level;
  }

  // Longest path from the origin over the collected (downward closed)
  // state set, in order of total degree.
  std::vector<const State*> order;
  order.reserve(longest.size());
  for (const auto& kv : longest) order.push_back(&kv.first);
  std::sort(order.begin(), order.end(), [](const State* a, const State* b) {
    std::int64_t da = 0, db = 0;
    for (std::int64_t x : *a) da += x;
    for (std::int64_t x : *b) db += x;
    if (da != db) return da < db;
    return *a < *b;
  });

  std::int64_t best = 0;
  State buf(n);
  for (const State* u : order) {
    if (std::all_of(u->begin(), u->end(), [](std::int64_t x) { return x == 0; }))
      continue;
    std::int64_t L = -1;
    for (const State& g : gens) {
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        buf[i] = (*u)[i] - g[i];
        if (buf[i] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      auto it = longest.find(buf);
      if (it != longest.end()) L = std::max(L, it->second + 1);
    }
    if (L < 0) throw std::logic_error("unreachable state in nu walk");
    longest[*u] = L;
    best = std::max(best, L);
  }
  return Int(best);
}

std::vector<FptBracketEntry> fpt_bracket_monomial(const MonomialIdeal& I,
                                                  const Int& p, int e_max,
                                                  const NuOptions& opts,
                                                  unsigned jobs) {
  if (!is_small_prime(p)) throw std::invalid_argument("p must be prime");
  if (e_max < 1) throw std::invalid_argument("e_max must be >= 1");
  if (!I.is_proper())
    throw std::invalid_argument("fpt brackets require a proper nonzero ideal");

  Rat threshold = lct_monomial(I);
  MonomialIdeal m = maximal_power(I.dim(), 1);

  std::vector<FptBracketEntry> entries(static_cast<std::size_t>(e_max));
  auto compute = [&](int e) {
    FptBracketEntry ent;
    ent.e = e;
    ent.q = pow(p, static_cast<unsigned>(e));
    ent.nu = nu_monomial(I, m, ent.q, opts);
    ent.lower = Rat(ent.nu, ent.q);
    ent.upper = Rat(ent.nu + 1, ent.q);
    ent.contains_threshold = ent.lower <= threshold && threshold <= ent.upper;
    return ent;
  };

  if (jobs <= 1) {
    for (int e = 1; e <= e_max; ++e)
      entries[static_cast<std::size_t>(e - 1)] = compute(e);
  } else {
    std::vector<std::future<FptBracketEntry>> futs;
    for (int e = 1; e <= e_max; ++e)
      futs.push_back(std::async(std::launch::async, compute, e));
    for (int e = 1; e <= e_max; ++e)
      entries[static_cast<std::size_t>(e - 1)] = futs[static_cast<std::size_t>(e - 1)].get();
  }

  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i + 1].nu < p * entries[i].nu)
      throw std::logic_error("nu scaling law violated; this is a bug");
  return entries;
}

MonomialIdeal colon_frobenius_maximal(std::size_t n, const Int& q, const Int& t) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  Int threshold = Int(n) * q - Int(n) + 1;
  if (t >= threshold) return MonomialIdeal::unit(n);
  return sum(frobenius_power(n, q), maximal_power(n, threshold - t));
}

namespace {

Int ceil_to_int(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  if (num <= 0) return 0;
  return (num + den - 1) / den;
}

}  // namespace

MonomialIdeal valuation_ideal(const MonomialValuation& v, const Rat& bound,
                              bool strict) {
  const std::size_t n = v.weights.size();
  if (n == 0) throw std::invalid_argument("empty valuation");
  for (const Rat& w : v.weights)
    if (w < 0) throw std::invalid_argument("valuation weights must be >= 0");

  if (bound < 0 || (!strict && bound == 0)) return MonomialIdeal::unit(n);
  bool any_positive = false;
  for (const Rat& w : v.weights) any_positive |= (w > 0);
  if (!any_positive) return MonomialIdeal::zero(n);

  std::vector<Int> box(n, 0);
  Int cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (v.weights[i] > 0)
      box[i] = ceil_to_int(bound / v.weights[i]) + (strict ? 1 : 0);
    cells *= box[i] + 1;
    if (cells > 4'000'000)
      throw BudgetError("valuation_ideal search box too large", 0);
  }

  std::vector<ExpVec> found;
  ExpVec u(n, 0);
  for (;;) {
    Rat val = v.value(u);
    if (strict ? val > bound : val >= bound) found.push_back(u);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++u[i] <= box[i]) break;
      u[i] = 0;
    }
    if (i == n) break;
  }
  return MonomialIdeal(n, std::move(found));
}

bool valuation_colon_check(const MonomialValuation& v, const Int& q,
                           const Rat& bound) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  const std::size_t n = v.weights.size();
  bool any_positive = false;
  for (const Rat& w : v.weights) any_positive |= (w > 0);
  if (!any_positive)
    throw std::invalid_argument("valuation must have a positive weight");

  MonomialIdeal frob = frobenius_power(n, q);
  MonomialIdeal lhs = colon(frob, valuation_ideal(v, bound, false));

  Rat total = 0;
  for (const Rat& w : v.weights) total += w;
  Rat residual = Rat(q - 1) * total - bound;
  MonomialIdeal rhs = sum(frob, valuation_ideal(v, residual, true));
  return lhs == rhs;
}

std::optional<Int> lojasiewicz_exponent(const MonomialIdeal& I) {
  if (I.is_zero())
    throw std::invalid_argument("Lojasiewicz exponent of the zero ideal");
  if (!is_m_primary(I)) return std::nullopt;
  MonomialIdeal closure = integral_closure(I);
  Int dmax = I.max_degree();
  for (Int t = 1; t <= dmax; ++t)
    if (ideal_contains(closure, maximal_power(I.dim(), t))) return t;
  // m^d lies in the closure for ideals generated in degree <= d.
  throw std::logic_error("Lojasiewicz exponent above the degree bound");
}

bool is_small_prime(const Int& p) {
  if (p < 2 || p > std::numeric_limits<std::int64_t>::max()) return false;
  std::int64_t v = static_cast<std::int64_t>(p);
  if (v < 4) return true;
  if (v % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

}  // namespace newton
