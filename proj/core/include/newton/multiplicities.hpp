#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "newton/monomial_ideal.hpp"

namespace newton {

/// Finite-difference grid configuration. The colength of I^r m^s agrees
/// with a polynomial of total degree n once r, s are large enough; the
/// default start offset is n * max generator degree, and the grid is
/// re-based (up to max_restarts times) if the differences have not yet
/// stabilized there.
struct GridOptions {
  int start = -1;  // -1: n * max_degree
  int max_restarts = 3;
  std::int64_t cell_budget = 16'000'000;
};

/// Hilbert-Samuel multiplicity e(I) of an m-primary monomial ideal: the
/// n-th forward difference of t -> colength(I^t), accepted once two
/// consecutive differences agree.
Int hilbert_samuel(const MonomialIdeal& I, const GridOptions& opts = {});

/// The tuple (e_0, ..., e_n) of mixed multiplicities of an m-primary
/// monomial ideal against the maximal ideal, read off from mixed finite
/// differences of the colength grid L(r, s) = colength(I^r m^s):
/// the order-n difference with j steps in r and n-j in s equals e_j on
/// the polynomial regime. Stability is verified at two consecutive base
/// points and all order-(n+1) differences are checked to vanish; a grid
/// that fails to stabilize within the configured restarts raises
/// StabilizationError rather than returning a truncated answer.
std::vector<Int> mixed_multiplicities(const MonomialIdeal& I,
                                      const GridOptions& opts = {});

struct SigmaOptions {
  int max_t = 64;  // cap for the m^t cutoff doubling
  GridOptions grid;
};

/// The stabilized mixed multiplicity: sup over t of e_j(I + m^t).
/// Infinite (nullopt) exactly when j exceeds the codimension of I; for
/// m-primary I it equals e_j(I) directly. Otherwise t doubles until two
/// consecutive values agree.
std::optional<Int> sigma(const MonomialIdeal& I, std::size_t j,
                         const SigmaOptions& opts = {});

/// Log-convexity check v_j^2 <= v_{j-1} * v_{j+1} for consecutive finite
/// entries. Pass the full vector including the leading 1.
bool minkowski_check(const std::vector<std::optional<Int>>& v);
bool minkowski_check(const std::vector<Int>& v);

}  // namespace newton
