#include "doctest.h"

#include <random>

#include "newton/errors.hpp"
#include "newton/polytope.hpp"
#include "newton/thresholds.hpp"
#include "test_util.hpp"

using namespace newton;
using namespace testutil;

namespace {

MonomialIdeal staircase6() {
  return ideal(2, {{6, 0}, {5, 1}, {3, 2}, {2, 3}, {1, 4}, {0, 6}});
}

}  // namespace

TEST_CASE("thresholds of basic monomial ideals") {
  CHECK(lct_monomial(staircase6()) == Rat(2, 5));
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 4; ++d)
      CHECK(lct_monomial(maximal_power(static_cast<std::size_t>(n), d)) ==
            Rat(n, d));
  CHECK(lct_monomial(ideal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}})) ==
        Rat(1, 2) + Rat(1, 3) + Rat(1, 7));
  CHECK_THROWS_AS(lct_monomial(MonomialIdeal::unit(2)), std::invalid_argument);
}

TEST_CASE("threshold identities on random ideals") {
  std::mt19937 rng(401);
  for (int trial = 0; trial < 15; ++trial) {
    MonomialIdeal I = random_proper(rng, 2, 5, 3);
    Rat c = lct_monomial(I);
    for (int t = 2; t <= 3; ++t)
      CHECK(lct_monomial(power(I, t)) == c / t);
    CHECK(lct_monomial(integral_closure(I)) == c);
    MonomialIdeal J = random_proper(rng, 2, 5, 3);
    CHECK(lct_monomial(sum(I, J)) <= c + lct_monomial(J));
  }
}

TEST_CASE("nu against the maximal ideal") {
  MonomialIdeal m = maximal_power(2, 1);
  for (Int q : {Int(2), Int(4), Int(8)})
    CHECK(nu_monomial(m, m, q) == 2 * (q - 1));
  // Frozen by hand: the largest t with x^{2a} y^{3b}, a+b = t, outside
  // (x^9, y^9) is a = 4, b = 2.
  CHECK(nu_monomial(ideal(2, {{2, 0}, {0, 3}}), m, 9) == 6);
  CHECK(nu_monomial(ideal(2, {{1, 1}}), m, 8) == 7);
  CHECK_THROWS_AS(nu_monomial(ideal(2, {{1, 0}}), ideal(2, {{2, 0}}), 4),
                  std::invalid_argument);  // J not m-primary
  CHECK_THROWS_AS(nu_monomial(m, ideal(2, {{2, 0}, {0, 2}}), 1),
                  std::invalid_argument);  // q too small
}

TEST_CASE("nu against a non-maximal reference ideal") {
  // (xy)^t outside (x^{2q}, y^{3q}) exactly when t <= 2q - 1
  MonomialIdeal I = ideal(2, {{1, 1}});
  MonomialIdeal J = ideal(2, {{2, 0}, {0, 3}});
  for (Int q : {Int(2), Int(3), Int(5)})
    CHECK(nu_monomial(I, J, q) == 2 * q - 1);
}

TEST_CASE("nu brackets: scaling law and the one-sided bound") {
  std::mt19937 rng(402);
  for (int trial = 0; trial < 8; ++trial) {
    MonomialIdeal I = random_m_primary(rng, 2, 4, 2);
    Rat c = lct_monomial(I);
    for (Int p : {Int(2), Int(3)}) {
      auto entries = fpt_bracket_monomial(I, p, 3);
      for (const auto& ent : entries) {
        CHECK(ent.lower < c);  // nu/q approaches the threshold from below
        CHECK(ent.upper == Rat(ent.nu + 1, ent.q));
      }
      for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        CHECK(entries[i + 1].nu >= p * entries[i].nu);
    }
  }
}

TEST_CASE("bracket containment is data, not a theorem") {
  // (x^2, y^3) has threshold 5/6; nu against powers of 5 gives
  // 3, 20, 103 and only the middle bracket [20/25, 21/25] reaches 5/6.
  auto entries = fpt_bracket_monomial(ideal(2, {{2, 0}, {0, 3}}), 5, 3);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].nu == 3);
  CHECK(entries[1].nu == 20);
  CHECK(entries[2].nu == 103);
  CHECK_FALSE(entries[0].contains_threshold);
  CHECK(entries[1].contains_threshold);
  CHECK_FALSE(entries[2].contains_threshold);

  // The staircase example at p = 7: nu = 2, 19 and both closed
  // brackets contain 2/5.
  auto st = fpt_bracket_monomial(staircase6(), 7, 2);
  REQUIRE(st.size() == 2);
  CHECK(st[0].nu == 2);
  CHECK(st[1].nu == 19);
  CHECK(st[0].contains_threshold);
  CHECK(st[1].contains_threshold);

  // m in two variables at q = 8: nu = n(q-1) = 14.
  auto mm = fpt_bracket_monomial(maximal_power(2, 1), 2, 3);
  CHECK(mm[2].nu == 14);
  CHECK_FALSE(mm[2].contains_threshold);  // (nu+1)/q = 15/8 < 2
}

TEST_CASE("bracket entries are identical under concurrent evaluation") {
  MonomialIdeal I = ideal(2, {{3, 0}, {1, 1}, {0, 4}});
  auto serial = fpt_bracket_monomial(I, 3, 4);
  auto parallel = fpt_bracket_monomial(I, 3, 4, {}, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].nu == parallel[i].nu);
    CHECK(serial[i].lower == parallel[i].lower);
  }
}

TEST_CASE("colon with Frobenius powers of the maximal ideal") {
  CHECK(colon_frobenius_maximal(2, 4, 7) == MonomialIdeal::unit(2));
  CHECK(colon_frobenius_maximal(2, 4, 3) ==
        sum(frobenius_power(2, 4), maximal_power(2, 4)));
  for (Int q : {Int(3), Int(5), Int(9)})
    CHECK(colon_frobenius_maximal(1, q, 1) == ideal(1, {{static_cast<long>(q) - 1}}));
}

TEST_CASE("colon formula agrees with enumeration") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (Int q : {Int(2), Int(3), Int(4), Int(9)})
      for (Int t = 1; t <= 3 * Int(n) * q; t += (n == 3 ? 7 : 3)) {
        MonomialIdeal lhs = colon_frobenius_maximal(n, q, t);
        MonomialIdeal rhs =
            brute_colon(frobenius_power(n, q), maximal_power(n, t),
                        static_cast<long>(q));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("valuation ideals") {
  MonomialValuation v11{{Rat(1), Rat(1)}};
  CHECK(valuation_ideal(v11, 2, false) == maximal_power(2, 2));
  MonomialValuation vhalf{{Rat(1, 2), Rat(1, 3)}};
  CHECK(valuation_ideal(vhalf, 1, false) ==
        ideal(2, {{2, 0}, {1, 2}, {0, 3}}));
  MonomialValuation vdeg{{Rat(1), Rat(0)}};
  CHECK(valuation_ideal(vdeg, 3, false) == ideal(2, {{3, 0}}));
  CHECK(valuation_ideal(v11, 0, false) == MonomialIdeal::unit(2));
  MonomialValuation vzero{{Rat(0), Rat(0)}};
  CHECK(valuation_ideal(vzero, 1, false).is_zero());
}

TEST_CASE("valuation colon identity") {
  CHECK(valuation_colon_check(MonomialValuation{{Rat(1), Rat(1)}}, 3, 2));
  CHECK(valuation_colon_check(MonomialValuation{{Rat(1, 2), Rat(1, 3)}}, 4, 1));
  CHECK(valuation_colon_check(MonomialValuation{{Rat(1), Rat(1)}}, 3, 0));
  std::mt19937 rng(403);
  std::uniform_int_distribution<int> num(0, 3), den(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 1 + trial % 3;
    MonomialValuation v;
    for (std::size_t i = 0; i < n; ++i)
      v.weights.push_back(Rat(num(rng), den(rng)));
    bool positive = false;
    for (const Rat& w : v.weights) positive |= (w > 0);
    if (!positive) v.weights[0] = 1;
    Rat bound(num(rng), den(rng));
    for (Int q : {Int(2), Int(5), Int(9)}) CHECK(valuation_colon_check(v, q, bound));
  }
}

TEST_CASE("Lojasiewicz exponents") {
  for (int d = 1; d <= 4; ++d)
    CHECK(lojasiewicz_exponent(maximal_power(2, d)) == Int(d));
  CHECK(lojasiewicz_exponent(ideal(2, {{2, 0}, {0, 3}})) == Int(3));
  CHECK_FALSE(lojasiewicz_exponent(ideal(2, {{1, 1}})).has_value());
}

TEST_CASE("restriction drops the threshold by at most the Lojasiewicz reciprocal") {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 2 + trial % 2;
    MonomialIdeal I = random_m_primary(rng, n, 5, 3);
    Rat c = lct_monomial(I);
    Int L = *lojasiewicz_exponent(I);
    for (std::size_t k = 0; k < n; ++k) {
      MonomialIdeal R = restrict_coordinate(I, k);
      CHECK(c - lct_monomial(R) >= Rat(1, L));
    }
  }
}
