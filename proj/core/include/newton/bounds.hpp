#pragma once

#include <optional>
#include <vector>

#include "newton/monomial_ideal.hpp"
#include "newton/multiplicities.hpp"
#include "newton/rational.hpp"

namespace newton {

/// The multiplicity lower bound for the singularity threshold:
/// 1/s_1 + s_1/s_2 + ... + s_{l-1}/s_l, where s_j is the stabilized
/// mixed multiplicity sigma(I, j). Defined for 1 <= l <= codim(I).
Rat multiplicity_lower_bound(const MonomialIdeal& I, std::size_t l,
                             const SigmaOptions& opts = {});

/// The sigma values (s_1, ..., s_l) entering the lower bound.
std::vector<Int> sigma_vector(const MonomialIdeal& I, std::size_t l,
                              const SigmaOptions& opts = {});

struct BoundReport {
  Rat lower;      // the multiplicity bound
  Rat threshold;  // lct of the ideal
  Rat slack;      // threshold - lower; nonnegative on every monomial ideal
  bool equality = false;
};

/// Exact comparison of the multiplicity lower bound against the
/// threshold of a proper nonzero monomial ideal.
BoundReport check_bound(const MonomialIdeal& I, std::size_t l,
                        const SigmaOptions& opts = {});

/// Witness that the ideal is extremal: after relabelling variables by
/// `variables`, the integral closure of I equals the integral closure
/// of (x_{v_1}^{d_1}, ..., x_{v_l}^{d_l}).
struct ClassificationWitness {
  std::vector<std::size_t> variables;  // distinct indices, length l
  std::vector<Int> degrees;            // nondecreasing, length l
};

/// Searches coordinate relabellings and degree tuples for a witness
/// that closure(I) is the closure of pure powers of l variables.
/// Requires check_bound(I, l) to report equality. Candidate degrees are
/// read from the sigma ratios first (which the equality case forces to
/// be integers), falling back to all nondecreasing tuples up to the
/// generator degree bound. Returns the lexicographically least witness,
/// or nullopt when none exists; a nullopt on an equality input is data
/// worth reporting, not an error.
std::optional<ClassificationWitness> classify_equality(
    const MonomialIdeal& I, std::size_t l, const SigmaOptions& opts = {});

struct TwoDegreeReport {
  Rat assembled;  // lct(I_1 + m^{d_2})
  Rat predicted;  // n/d_2 + lct(I_1) (d_2 - d_1)/d_2
  bool equal = false;
};

/// Checks the two-degree threshold formula on I = I_1 + m^{d_2} for an
/// ideal I_1 all of whose generators have the same degree d_1 < d_2.
/// Equality is a theorem; a false return indicates a bug.
TwoDegreeReport two_degree_check(const MonomialIdeal& I1, const Int& d2);

/// Relabels coordinates: generator exponent g maps to g' with
/// g'[perm[i]] = g[i]. perm must be a permutation of 0..n-1.
MonomialIdeal permute_coordinates(const MonomialIdeal& I,
                                  const std::vector<std::size_t>& perm);

}  // namespace newton
