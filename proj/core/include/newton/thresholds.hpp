#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "newton/monomial_ideal.hpp"
#include "newton/rational.hpp"

namespace newton {

/// A monomial valuation given by its nonnegative weights on the
/// variables; the value of x^u is the weighted sum of the exponents.
struct MonomialValuation {
  std::vector<Rat> weights;

  Rat value(const ExpVec& u) const {
    Rat s = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * Rat(u[i]);
    return s;
  }
};

/// The log canonical threshold (= F-pure threshold in characteristic p)
/// of a proper nonzero monomial ideal: the reciprocal of the diagonal
/// parameter of its Newton polytope.
Rat lct_monomial(const MonomialIdeal& I);

struct NuOptions {
  std::int64_t max_states = 10'000'000;
};

/// nu_I^J(q): the largest t such that I^t is not contained in J^[q],
/// where J is m-primary and I is contained in the radical of J.
/// Computed as the longest path, over the lattice points outside J^[q],
/// of the walk that adds one generator of I per step; valid because
/// membership in the monomial ideal J^[q] is upward closed, so every
/// partial product of a surviving product survives. Returns 0 when
/// every generator already lies in J^[q]. BudgetError carries the best
/// level reached when the state budget is exhausted.
Int nu_monomial(const MonomialIdeal& I, const MonomialIdeal& J, const Int& q,
                const NuOptions& opts = {});

struct FptBracketEntry {
  int e = 0;
  Int q;
  Int nu;
  Rat lower;   // nu / q
  Rat upper;   // (nu + 1) / q
  bool contains_threshold = false;  // lower <= lct(I) <= upper
};

/// The sequence nu(p^e) for e = 1..e_max against the maximal ideal,
/// with the bracket [nu/p^e, (nu+1)/p^e] for each entry. The scaling
/// law nu(p^{e+1}) >= p nu(p^e) is verified (its failure would be a
/// bug, not data). Whether the closed bracket contains the threshold is
/// *recorded* per entry, never asserted: the sequence nu/p^e converges
/// to the threshold from below, and for non-principal ideals the upper
/// end of the bracket can stay below the limit at every finite e.
/// `jobs` > 1 computes the entries concurrently.
std::vector<FptBracketEntry> fpt_bracket_monomial(const MonomialIdeal& I,
                                                  const Int& p, int e_max,
                                                  const NuOptions& opts = {},
                                                  unsigned jobs = 1);

/// The colon (m^[q] : m^t) in n variables by closed formula: the unit
/// ideal when t >= n(q-1)+1, and m^[q] + m^{n(q-1)+1-t} otherwise.
MonomialIdeal colon_frobenius_maximal(std::size_t n, const Int& q, const Int& t);

/// The ideal of monomials with valuation >= bound (or > bound when
/// strict). Monomials touching a zero-weight variable are never minimal
/// generators, so the search box is bounded by ceil(bound / w_i) on the
/// positive-weight axes. A negative bound gives the unit ideal; all
/// weights zero with a positive bound gives the zero ideal.
MonomialIdeal valuation_ideal(const MonomialValuation& v, const Rat& bound,
                              bool strict);

/// Verifies ((x_1^q,...,x_n^q) : {v >= bound}) = (x_1^q,...,x_n^q) +
/// {v > (q-1) v(x_1...x_n) - bound} by computing both sides, the left
/// through the generic monomial colon and the right through the formula.
bool valuation_colon_check(const MonomialValuation& v, const Int& q,
                           const Rat& bound);

/// Least t with m^t contained in the integral closure of I; nullopt
/// (infinite) when I is not m-primary.
std::optional<Int> lojasiewicz_exponent(const MonomialIdeal& I);

/// Trial-division primality for word-sized p.
bool is_small_prime(const Int& p);

}  // namespace newton
