#pragma once

#include <cstdint>
#include <vector>

#include "newton/monomial_ideal.hpp"

namespace newton {

/// Exact colengths of the ideals I^r m^s over a rectangle of exponents,
/// for m-primary monomial I, computed by lattice-point counting without
/// ever expanding generator sets of powers.
///
/// For each column of the box below the pure powers (all coordinates but
/// the last fixed), the table keeps the least height z such that the
/// column point lies in the current ideal; the colength is the sum of
/// those heights. Multiplying the ideal by I (or by m) is one sweep over
/// the table, O(cells * #generators), because a monomial lies in J*K
/// exactly when subtracting some generator of J lands it in K.
class PowerLengthTable {
 public:
  PowerLengthTable(const MonomialIdeal& I, int r_lo, int r_hi, int s_lo,
                   int s_hi, std::int64_t cell_budget = 16'000'000);

  /// Colength of I^r m^s. (r, s) must lie in the constructed rectangle.
  Int length(int r, int s) const;

 private:
  int r_lo_, r_hi_, s_lo_, s_hi_;
  std::vector<std::int64_t> values_;
};

}  // namespace newton
