#include "doctest.h"

#include <random>

#include "newton/multiplicities.hpp"
#include "newton/polytope.hpp"
#include "test_util.hpp"

using namespace newton;
using namespace testutil;

namespace {

RatPoint pt(std::initializer_list<Rat> c) { return RatPoint(c); }

// The running staircase example (x^6, x^5 y, x^3 y^2, x^2 y^3, x y^4, y^6).
MonomialIdeal staircase6() {
  return ideal(2, {{6, 0}, {5, 1}, {3, 2}, {2, 3}, {1, 4}, {0, 6}});
}

}  // namespace

TEST_CASE("membership in the polytope") {
  NewtonPolytope P(ideal(2, {{2, 0}, {0, 2}}));
  CHECK(member(P, pt({1, 1})));
  CHECK_FALSE(member(P, pt({Rat(1, 2), Rat(1, 2)})));

  NewtonPolytope Q(staircase6());
  CHECK(member(Q, pt({Rat(5, 2), Rat(5, 2)})));
  CHECK_FALSE(member(Q, pt({Rat(5, 2) - Rat(1, 100), Rat(5, 2) - Rat(1, 100)})));

  CHECK_THROWS_AS(member(P, pt({Rat(-1), Rat(0)})), std::invalid_argument);
  CHECK_THROWS_AS(member(P, pt({Rat(1)})), std::invalid_argument);
}

TEST_CASE("membership holds at the generators and is monotone") {
  std::mt19937 rng(201);
  for (int trial = 0; trial < 20; ++trial) {
    MonomialIdeal I = random_proper(rng, 3, 5, 4);
    NewtonPolytope P(I);
    for (const ExpVec& g : I.gens()) {
      RatPoint q(3);
      for (std::size_t j = 0; j < 3; ++j) q[j] = Rat(g[j]);
      CHECK(member(P, q));
      q[trial % 3] += Rat(trial % 5, 3);
      CHECK(member(P, q));
    }
  }
}

TEST_CASE("diagonal parameter") {
  CHECK(mu(NewtonPolytope(staircase6())) == Rat(5, 2));
  // m^d in n variables has diagonal parameter d/n
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 4; ++d)
      CHECK(mu(NewtonPolytope(maximal_power(static_cast<std::size_t>(n), d))) ==
            Rat(d, n));
  CHECK(mu(NewtonPolytope(
            ideal(3, {{3, 0, 0}, {1, 1, 0}, {0, 3, 0}, {0, 0, 4}}))) ==
        Rat(4, 5));
  CHECK_THROWS_AS(mu(NewtonPolytope(MonomialIdeal::zero(2))),
                  std::invalid_argument);
}

TEST_CASE("diagonal parameter agrees with the plane hull-chain oracle") {
  CHECK(chain_mu_2d(staircase6()) == Rat(5, 2));
  std::mt19937 rng(206);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialIdeal I = random_proper(rng, 2, 8, 4);
    CHECK(mu(NewtonPolytope(I)) == chain_mu_2d(I));
  }
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal I = random_m_primary(rng, 2, 7, 3);
    CHECK(mu(NewtonPolytope(I)) == chain_mu_2d(I));
  }
}

TEST_CASE("diagonal parameter scales along powers") {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 10; ++trial) {
    MonomialIdeal I = random_proper(rng, 2, 5, 3);
    Rat base = mu(NewtonPolytope(I));
    for (int t = 2; t <= 4; ++t)
      CHECK(mu(NewtonPolytope(power(I, t))) == Rat(t) * base);
  }
}

TEST_CASE("integral closure of plane staircases") {
  CHECK(integral_closure(ideal(2, {{2, 0}, {0, 2}})) ==
        ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(integral_closure(ideal(2, {{3, 0}, {0, 2}})) ==
        ideal(2, {{3, 0}, {2, 1}, {0, 2}}));
  MonomialIdeal closed = ideal(2, {{3, 0}, {1, 1}, {0, 3}});
  CHECK(integral_closure(closed) == closed);
}

TEST_CASE("integral closure is idempotent and increasing") {
  std::mt19937 rng(203);
  for (int trial = 0; trial < 15; ++trial) {
    MonomialIdeal I = random_proper(rng, 3, 5, 4);
    MonomialIdeal C = integral_closure(I);
    CHECK(ideal_contains(C, I));
    CHECK(integral_closure(C) == C);
    for (int t = 2; t <= 3; ++t)
      CHECK(ideal_contains(integral_closure(power(I, t)), power(C, t)));
  }
}

TEST_CASE("closure powers land in smaller ordinary powers") {
  // closure(I)^{t+n} inside I^{t+1}
  std::mt19937 rng(204);
  for (int trial = 0; trial < 10; ++trial) {
    MonomialIdeal I = random_proper(rng, 2, 4, 3);
    MonomialIdeal C = integral_closure(I);
    for (int t = 1; t <= 2; ++t)
      CHECK(ideal_contains(power(I, t + 1), power(C, t + 2)));
  }
}

TEST_CASE("multiplicity is blind to integral closure") {
  std::mt19937 rng(205);
  for (int trial = 0; trial < 8; ++trial) {
    MonomialIdeal I = random_m_primary(rng, 2, 5, 3);
    CHECK(hilbert_samuel(I) == hilbert_samuel(integral_closure(I)));
  }
}

TEST_CASE("simplex region recognition") {
  MonomialIdeal I = integral_closure(ideal(2, {{2, 0}, {0, 3}}));
  CHECK(simplex_region_equals(I, {Rat(2), Rat(3)}));
  CHECK_FALSE(simplex_region_equals(ideal(2, {{2, 0}, {0, 2}}), {Rat(2), Rat(3)}));
  CHECK_THROWS_AS(simplex_region_equals(I, {Rat(2), Rat(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(simplex_region_equals(ideal(2, {{1, 1}}), {Rat(1), Rat(1)}),
                  std::invalid_argument);
}

TEST_CASE("simplex region fails off the mixed-multiplicity simplex") {
  // For the staircase example the bound is strict, so the region test
  // with intercepts (e_1, e_2/e_1) must reject.
  MonomialIdeal I = staircase6();
  std::vector<Int> e = mixed_multiplicities(I);
  CHECK(e == std::vector<Int>{1, 5, 28});
  CHECK_FALSE(simplex_region_equals(I, {Rat(e[1]), Rat(e[2], e[1])}));
}
