#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace newton {

/// Arbitrary-precision signed integer. Exponents, lengths and
/// multiplicities use this type so Frobenius powers q = p^e never
/// overflow.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept reduced with positive denominator
/// by the backend. All thresholds and polytope queries are exact; no
/// floating point appears anywhere in the library.
using Rat = boost::multiprecision::cpp_rational;

/// "a/b" with the reduced denominator, or just "a" when b = 1.
inline std::string to_string(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

/// Parses "a" or "a/b" (optional leading '-'). Empty result on malformed
/// input or zero denominator.
inline std::optional<Rat> parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rat(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// Least common multiple of the denominators of a list of rationals.
inline Int denominator_lcm(const std::vector<Rat>& values) {
  Int l = 1;
  for (const Rat& v : values) l = lcm(l, Int(denominator(v)));
  return l;
}

}  // namespace newton
