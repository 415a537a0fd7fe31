#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "newton/monomial_ideal.hpp"
#include "newton/rational.hpp"

namespace newton {

/// Coefficient for characteristic-p polynomial arithmetic: an element
/// of F_p[t], stored densely by t-degree with entries reduced mod p and
/// trailing zeros stripped. Plain F_p scalars are the degree-0 case, so
/// one representation serves both the parametric and non-parametric
/// ideals. Division never occurs anywhere in this module.
class FpCoeff {
 public:
  FpCoeff() : p_(0) {}
  FpCoeff(std::uint32_t p, std::vector<std::uint32_t> c);
  static FpCoeff scalar(std::uint32_t p, std::uint64_t value);
  static FpCoeff parameter_power(std::uint32_t p, std::size_t k,
                                 std::uint64_t scale = 1);  // scale * t^k

  bool is_zero() const { return coeffs_.empty(); }
  std::uint32_t characteristic() const { return p_; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

  FpCoeff operator+(const FpCoeff& o) const;
  FpCoeff operator*(const FpCoeff& o) const;
  bool operator==(const FpCoeff&) const = default;

  /// Multiplies by the unique F_p scalar making the lowest nonzero
  /// t-coefficient equal to 1.
  FpCoeff unit_normalized() const;

  std::string str() const;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> coeffs_;
};

/// Sparse multivariate polynomial over F_p (or F_p[t]) in a fixed
/// number of variables, keyed by exponent vector. Zero coefficients are
/// never stored; the term map keeps a canonical order, so structural
/// equality is polynomial equality.
class SparsePoly {
 public:
  using Exps = std::vector<std::int64_t>;

  SparsePoly(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {}

  static SparsePoly monomial(std::uint32_t p, Exps e, FpCoeff c);

  void add_term(const Exps& e, const FpCoeff& c);

  std::uint32_t characteristic() const { return p_; }
  std::size_t dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exps, FpCoeff>& terms() const { return terms_; }

  bool operator==(const SparsePoly&) const = default;

 private:
  std::uint32_t p_;
  std::size_t dim_;
  std::map<Exps, FpCoeff> terms_;
};

SparsePoly poly_sum(const SparsePoly& f, const SparsePoly& g);
SparsePoly poly_mul(const SparsePoly& f, const SparsePoly& g);
/// Binary exponentiation; k = 0 gives the constant 1.
SparsePoly poly_pow(const SparsePoly& f, std::uint64_t k);

/// Drops every term whose exponent lies in J^[q]. Because J^[q] is a
/// monomial ideal, f lies in J^[q] exactly when the result is zero, and
/// the reduction is linear, idempotent, and compatible with products.
SparsePoly reduce_mod_frobenius(const SparsePoly& f, const MonomialIdeal& J,
                                const Int& q);

/// The sum of the terms of f whose exponents maximize the integer
/// weight functional. f must be nonzero.
SparsePoly initial_form(const SparsePoly& f, const std::vector<Int>& weights);

struct NuPolyOptions {
  std::int64_t max_states = 2'000'000;
};

/// nu for polynomial generators: the largest t such that some t-fold
/// product of the generators survives reduction mod J^[q], q = p^e.
/// Breadth-first over generator multisets; states are residues mod
/// J^[q] in unit-normalized canonical form, deduplicated per level, and
/// zero residues are pruned (their multiples reduce to zero as well).
/// Every generator must lie in the radical of J termwise, which keeps
/// the search finite.
Int nu_poly(const std::vector<SparsePoly>& gens, const MonomialIdeal& J,
            const Int& p, int e, const NuPolyOptions& opts = {});

}  // namespace newton
