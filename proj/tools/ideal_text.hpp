#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "newton/charp.hpp"
#include "newton/monomial_ideal.hpp"

namespace newton::text {

/// Parse-level failure: bad syntax, an unknown variable, or input that
/// needs a characteristic/parameter the invocation did not declare.
struct InputError {
  std::size_t position = 0;
  std::string message;
};

/// One parsed product: numeral coefficient, optional parameter power,
/// and variable exponents.
struct Term {
  std::uint64_t scalar = 1;
  std::size_t t_power = 0;
  std::map<std::string, std::int64_t> exponents;
};

/// Comma-separated generators, each a sum of terms.
struct ParsedIdeal {
  std::vector<std::vector<Term>> generators;
};

/// Grammar:
///   ideal  := gen ("," gen)*
///   gen    := term ("+" term)*
///   term   := atom ("*" atom)*
///   atom   := nat | tpow | var ["^" nat]
///   tpow   := "t" ["^" nat]
/// The name t is reserved for the coefficient parameter and is never a
/// ring variable. Throws InputError with the offending byte position.
ParsedIdeal parse_ideal_text(const std::string& input);

/// An ideal ready for dispatch: monomial-only inputs carry a
/// MonomialIdeal, anything else carries characteristic-p polynomials.
struct IdealSpec {
  std::vector<std::string> vars;
  std::uint32_t characteristic = 0;
  bool parametric = false;
  std::optional<MonomialIdeal> monomial;
  std::vector<SparsePoly> polys;
};

/// Resolves variable names (declared order, or inferred: x,y,z,w then
/// x1..xn, unknown names after, alphabetically) and routes the parse to
/// the monomial or polynomial representation. Polynomial input requires
/// a positive characteristic; the parameter requires `parametric`.
IdealSpec build_ideal(const ParsedIdeal& parsed,
                      const std::vector<std::string>& declared_vars,
                      std::uint32_t characteristic, bool parametric);

/// Canonical names for an n-variable ring: x,y,z,w up to four
/// variables, x1..xn beyond.
std::vector<std::string> default_var_names(std::size_t n);

std::string format_monomial(const ExpVec& e, const std::vector<std::string>& vars);
std::string format_ideal(const MonomialIdeal& I, const std::vector<std::string>& vars);
std::string format_poly(const SparsePoly& f, const std::vector<std::string>& vars);

}  // namespace newton::text
