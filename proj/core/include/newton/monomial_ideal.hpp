#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "newton/rational.hpp"

namespace newton {

/// Exponent vector of a monomial: fixed length n, all coordinates >= 0.
using ExpVec = std::vector<Int>;

Int total_degree(const ExpVec& u);

/// True when x^g divides x^u, i.e. g <= u componentwise.
bool divides(const ExpVec& g, const ExpVec& u);

ExpVec vec_sum(const ExpVec& a, const ExpVec& b);
ExpVec vec_max(const ExpVec& a, const ExpVec& b);
/// max(a - b, 0) componentwise; the exponent of x^a : x^b.
ExpVec vec_sub_clamped(const ExpVec& a, const ExpVec& b);

/// A monomial ideal in a fixed ambient dimension, stored as its unique
/// minimal generating set in lexicographic order. Construction
/// canonicalizes eagerly, so structural equality coincides with ideal
/// equality. The zero ideal has no generators; the unit ideal is
/// generated by the zero vector. Instances are immutable.
class MonomialIdeal {
 public:
  /// Minimalizes `raw` into an antichain generating the same ideal.
  /// Throws std::invalid_argument on a length or sign mismatch.
  MonomialIdeal(std::size_t dim, std::vector<ExpVec> raw);

  static MonomialIdeal zero(std::size_t dim) { return MonomialIdeal(dim, {}); }
  static MonomialIdeal unit(std::size_t dim) {
    return MonomialIdeal(dim, {ExpVec(dim, 0)});
  }

  std::size_t dim() const { return dim_; }
  const std::vector<ExpVec>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_zero() && !is_unit(); }

  /// Largest total degree among minimal generators; 0 for zero/unit.
  Int max_degree() const;
  /// Smallest total degree among minimal generators (the order of the
  /// ideal at the origin); 0 for the zero ideal.
  Int min_degree() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t dim_;
  std::vector<ExpVec> gens_;
};

/// Antichain of componentwise-minimal elements of `raw`.
MonomialIdeal minimalize(std::size_t dim, std::vector<ExpVec> raw);

/// I * J: minimal generators of the product (pairwise sums, minimalized).
MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);

/// I^t via repeated multiplication; I^0 is the unit ideal.
MonomialIdeal power(const MonomialIdeal& I, const Int& t);

/// I + J.
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);

/// Intersection, via componentwise max of generator pairs. Exact for
/// monomial ideals; no Groebner machinery is involved.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// True when J is contained in I, i.e. every generator of J is divisible
/// by some generator of I.
bool ideal_contains(const MonomialIdeal& I, const MonomialIdeal& J);

/// Membership of the single monomial x^u in I.
bool contains_monomial(const MonomialIdeal& I, const ExpVec& u);

/// (I : J). J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

/// The Frobenius power m^[q] = (x_1^q, ..., x_n^q) of the maximal ideal.
MonomialIdeal frobenius_power(std::size_t dim, const Int& q);

/// The Frobenius power J^[q]: each generator scaled by q. q >= 1.
MonomialIdeal frobenius_power(const MonomialIdeal& J, const Int& q);

/// m^t, the t-th power of the maximal ideal (all monomials of degree t).
MonomialIdeal maximal_power(std::size_t dim, const Int& t);

/// The radical: generated by the squarefree supports of the generators.
MonomialIdeal radical(const MonomialIdeal& I);

/// Exponent of the minimal pure power of variable i in I, if one exists
/// among the generators.
std::optional<Int> pure_power_exponent(const MonomialIdeal& I, std::size_t i);

/// Height of I: minimum size of a set of variables meeting the support
/// of every generator. Throws on the zero or unit ideal.
int codimension(const MonomialIdeal& I);

/// Finite colength test: every variable appears as a pure power among
/// the generators (equivalently codimension = dim).
bool is_m_primary(const MonomialIdeal& I);

/// dim_k R/I, counted by enumerating the lattice box below the pure
/// powers. Requires I m-primary (otherwise the length is infinite).
Int length_quotient(const MonomialIdeal& I);

/// Image of I in the ring with variable k removed (the restriction to
/// the coordinate hyperplane x_k = 0). k is a 0-based index.
MonomialIdeal restrict_coordinate(const MonomialIdeal& I, std::size_t k);

}  // namespace newton
