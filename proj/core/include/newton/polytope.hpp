#pragma once

#include <vector>

#include "newton/monomial_ideal.hpp"
#include "newton/rational.hpp"

namespace newton {

/// A point with exact rational coordinates.
using RatPoint = std::vector<Rat>;

/// The Newton polytope of a monomial ideal: the convex hull of the
/// generator exponents plus the first orthant. Kept in V-representation
/// only; every query below reduces to exact LP feasibility, so no facet
/// enumeration ever happens.
class NewtonPolytope {
 public:
  explicit NewtonPolytope(MonomialIdeal ideal) : ideal_(std::move(ideal)) {}
  const MonomialIdeal& ideal() const { return ideal_; }
  std::size_t dim() const { return ideal_.dim(); }

 private:
  MonomialIdeal ideal_;
};

/// Membership of a nonnegative rational point: true iff some convex
/// combination of the generators is componentwise <= p.
bool member(const NewtonPolytope& P, const RatPoint& p);

/// The smallest t >= 0 with t*(1,...,1) in the polytope, computed as an
/// LP objective so the result is an exact rational. Requires a nonzero
/// underlying ideal.
Rat mu(const NewtonPolytope& P);

/// Integral closure of a nonzero monomial ideal: the ideal generated by
/// the lattice points of its Newton polytope. Minimal lattice points are
/// found inside the box bounded by the componentwise maxima of the
/// generators; if u lies in the polytope with u_i above that bound, the
/// orthant part of u absorbs a unit step, so u - b_i is still inside and
/// u was not minimal.
MonomialIdeal integral_closure(const MonomialIdeal& I);

/// True iff the Newton polytope of I equals the half-space region
/// { x >= 0 : sum x_j / a_j >= 1 }, checked as (i) every generator
/// satisfies the inequality and (ii) every simplex vertex a_j b_j lies
/// in the polytope. Requires a_j > 0 and I m-primary.
bool simplex_region_equals(const MonomialIdeal& I, const std::vector<Rat>& a);

}  // namespace newton
