#include "builtin_examples.hpp"

#include "newton/bounds.hpp"
#include "newton/charp.hpp"
#include "newton/degeneration.hpp"
#include "newton/multiplicities.hpp"
#include "newton/polytope.hpp"
#include "newton/thresholds.hpp"

namespace newton::examples {

using json = nlohmann::ordered_json;

namespace {

json plane_staircase() {
  MonomialIdeal I(2, {{6, 0}, {5, 1}, {3, 2}, {2, 3}, {1, 4}, {0, 6}});
  json j;
  j["ideal"] = "x^6, x^5*y, x^3*y^2, x^2*y^3, x*y^4, y^6";
  j["mu"] = to_string(mu(NewtonPolytope(I)));
  j["threshold"] = to_string(lct_monomial(I));
  std::vector<Int> e = mixed_multiplicities(I);
  j["mixed_multiplicities"] = {static_cast<long>(e[0]), static_cast<long>(e[1]),
                               static_cast<long>(e[2])};
  BoundReport r = check_bound(I, 2);
  j["lower_bound"] = to_string(r.lower);
  j["slack"] = to_string(r.slack);
  return j;
}

json pinched_polytope() {
  // b = (x^3, xy, y^3), c = b + (z^4), a = c + (z x^2)
  MonomialIdeal c(3, {{3, 0, 0}, {1, 1, 0}, {0, 3, 0}, {0, 0, 4}});
  MonomialIdeal a = sum(c, MonomialIdeal(3, {{2, 0, 1}}));
  json j;
  j["c"] = "x^3, x*y, y^3, z^4";
  j["a"] = "x^3, x*y, y^3, z^4, x^2*z";
  j["threshold_c"] = to_string(lct_monomial(c));
  j["threshold_a"] = to_string(lct_monomial(a));
  j["e_c"] = static_cast<long>(hilbert_samuel(c));
  j["e_a"] = static_cast<long>(hilbert_samuel(a));
  j["e2_c"] = static_cast<long>(mixed_multiplicities(c)[2]);
  j["e2_a"] = static_cast<long>(mixed_multiplicities(a)[2]);
  RatPoint corner{Rat(2), Rat(0), Rat(1)};
  j["pinched_corner_in_closure_c"] = member(NewtonPolytope(c), corner);
  Rat lhs = lct_monomial(a);
  Rat rhs = Rat(1) + Rat(mixed_multiplicities(a)[2], hilbert_samuel(a));
  j["strict_inequality"] = (lhs < rhs);
  return j;
}

json binomial_family(bool parametric) {
  json fam = json::array();
  MonomialIdeal m = maximal_power(2, 1);
  for (long p : {2L, 3L}) {
    json entry;
    entry["p"] = p;
    entry["generator"] = parametric
                             ? "x^" + std::to_string(p) + " + t*y^" + std::to_string(p)
                             : "x^" + std::to_string(p) + " + y^" + std::to_string(p + 1);
    json series = json::array();
    const int e_max = parametric ? 3 : 4;
    long q = 1;
    for (int e = 1; e <= e_max; ++e) {
      q *= p;
      SparsePoly f(static_cast<std::uint32_t>(p), 2);
      f.add_term({p, 0}, FpCoeff::scalar(static_cast<std::uint32_t>(p), 1));
      if (parametric)
        f.add_term({0, p}, FpCoeff::parameter_power(static_cast<std::uint32_t>(p), 1));
      else
        f.add_term({0, p + 1}, FpCoeff::scalar(static_cast<std::uint32_t>(p), 1));
      Int nu = nu_poly({f}, m, p, e);
      json ent;
      ent["e"] = e;
      ent["nu"] = static_cast<long>(nu);
      ent["bracket"] = {to_string(Rat(nu, q)), to_string(Rat(nu + 1, q))};
      ent["contains_limit"] = (Rat(nu, q) <= Rat(1, p) && Rat(1, p) <= Rat(nu + 1, q));
      series.push_back(ent);
    }
    entry["limit"] = to_string(Rat(1, p));
    entry["series"] = series;
    fam.push_back(entry);
  }
  return fam;
}

json weight_order_demo() {
  DegenerationInput in;
  in.degrees = {2, 3, 4, 5};
  in.groups.assign(4, {});
  in.groups[1] = {{1, 0, 0, 2}};
  in.groups[2] = {{0, 2, 0, 2}};
  DegenerationOrder ord = degeneration_order(in);
  json j;
  j["degrees"] = {2, 3, 4, 5};
  j["selected_group"] = static_cast<long>(ord.m_index + 1);
  json layers = json::array();
  for (const WeightLayer& l : ord.layers) layers.push_back(to_string(l.parameter));
  j["layer_parameters"] = layers;
  json w = json::array();
  for (const Int& c : ord.weights) w.push_back(c.str());
  j["weights"] = w;

  // The selection properties, re-evaluated from the returned map.
  auto eval = [&](const ExpVec& u) {
    Int s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += ord.weights[i] * u[i];
    return s;
  };
  ExpVec apex(4, 0);
  apex[ord.m_index] = in.degrees[ord.m_index];
  j["apex_attained"] = (eval(in.groups[1][0]) == eval(apex));
  j["other_groups_below"] = (eval(in.groups[2][0]) < eval(apex));
  return j;
}

}  // namespace

json compute_all() {
  json all;
  all["plane_staircase"] = plane_staircase();
  all["pinched_polytope"] = pinched_polytope();
  all["cusp_family"] = binomial_family(false);
  all["inseparable_family"] = binomial_family(true);
  all["weight_order"] = weight_order_demo();
  return all;
}

const std::string& expected_json_text() {
  static const std::string text =
#include "expected_examples.inc"
      ;
  return text;
}

}  // namespace newton::examples
