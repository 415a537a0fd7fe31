#include "doctest.h"

#include <random>

#include "ideal_text.hpp"
#include "test_util.hpp"

using namespace newton;
using namespace testutil;
namespace text = newton::text;

namespace {

text::IdealSpec parse(const std::string& s, std::uint32_t p = 0,
                      bool parametric = false,
                      std::vector<std::string> vars = {}) {
  return text::build_ideal(text::parse_ideal_text(s), vars, p, parametric);
}

}  // namespace

TEST_CASE("monomial ideals parse to canonical form") {
  auto spec = parse("x^6, x^5*y, x^3*y^2, x^2*y^3, x*y^4, y^6");
  REQUIRE(spec.monomial.has_value());
  CHECK(*spec.monomial ==
        ideal(2, {{6, 0}, {5, 1}, {3, 2}, {2, 3}, {1, 4}, {0, 6}}));
  CHECK(spec.vars == std::vector<std::string>{"x", "y"});

  auto unit = parse("x^0");
  REQUIRE(unit.monomial.has_value());
  CHECK(unit.monomial->is_unit());

  auto zero = parse("0");
  REQUIRE(zero.monomial.has_value());
  CHECK(zero.monomial->is_zero());
}

TEST_CASE("polynomials parse in positive characteristic") {
  auto spec = parse("x^2 + t*y^2", 2, true);
  REQUIRE(spec.polys.size() == 1);
  const SparsePoly& f = spec.polys[0];
  CHECK(f.terms().size() == 2);
  CHECK(f.terms().at({2, 0}) == FpCoeff::scalar(2, 1));
  CHECK(f.terms().at({0, 2}) == FpCoeff::parameter_power(2, 1));
}

TEST_CASE("parse failures carry positions") {
  CHECK_THROWS_AS(parse("x^2 +"), text::InputError);
  CHECK_THROWS_AS(parse("x^^2"), text::InputError);
  CHECK_THROWS_AS(parse(""), text::InputError);
  CHECK_THROWS_AS(parse("x^2, y^3)"), text::InputError);
  try {
    parse("x^2, (y)");
  } catch (const text::InputError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("routing errors") {
  // sums need a characteristic
  CHECK_THROWS_AS(parse("x^2 + y^3"), text::InputError);
  // the parameter needs --parametric
  CHECK_THROWS_AS(parse("x^2 + t*y^2", 2, false), text::InputError);
  // parametric needs positive characteristic
  CHECK_THROWS_AS(parse("x^2", 0, true), text::InputError);
  // unknown variable against a declared list
  CHECK_THROWS_AS(parse("q^2", 0, false, {"x", "y"}), text::InputError);
}

TEST_CASE("declared variables fix the ambient dimension") {
  auto spec = parse("y^2", 0, false, {"x", "y"});
  REQUIRE(spec.monomial.has_value());
  CHECK(*spec.monomial == ideal(2, {{0, 2}}));
}

TEST_CASE("printing and reparsing is the identity") {
  std::mt19937 rng(801);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 4;
    MonomialIdeal I = random_proper(rng, n, 6, 4);
    std::vector<std::string> vars = text::default_var_names(n);
    std::string printed = text::format_ideal(I, vars);
    auto spec = parse(printed, 0, false, vars);
    REQUIRE(spec.monomial.has_value());
    CHECK(*spec.monomial == I);
  }
  // the unit and zero ideals round-trip as well
  for (const MonomialIdeal& I :
       {MonomialIdeal::unit(2), MonomialIdeal::zero(2)}) {
    auto spec = parse(text::format_ideal(I, {"x", "y"}), 0, false, {"x", "y"});
    REQUIRE(spec.monomial.has_value());
    CHECK(*spec.monomial == I);
  }
}

TEST_CASE("default variable names") {
  CHECK(text::default_var_names(3) == std::vector<std::string>{"x", "y", "z"});
  CHECK(text::default_var_names(5) ==
        std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"});
}
