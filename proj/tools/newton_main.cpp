// Command-line front end: parses ideals, dispatches the library
// computations, and prints one JSON report per invocation. Exit code 0
// on success, 1 on a computation error (structured error JSON), 2 on a
// parse or usage error. Rationals are serialized exactly as "num/den";
// no floating point is ever printed.

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "builtin_examples.hpp"
#include "ideal_text.hpp"
#include "json.hpp"
#include "newton/bounds.hpp"
#include "newton/charp.hpp"
#include "newton/degeneration.hpp"
#include "newton/errors.hpp"
#include "newton/multiplicities.hpp"
#include "newton/polytope.hpp"
#include "newton/thresholds.hpp"

using json = nlohmann::ordered_json;
using namespace newton;
namespace text = newton::text;

namespace {

json int_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json ivec_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_json(x));
  return a;
}

struct Common {
  std::string ideal_text;
  std::vector<std::string> vars;
  std::uint32_t characteristic = 0;
  bool parametric = false;
  std::int64_t budget = 0;  // 0: defaults
  unsigned jobs = 1;
  bool pretty = false;
};

void add_common(CLI::App* cmd, Common& c, bool wants_ideal = true) {
  if (wants_ideal)
    cmd->add_option("ideal", c.ideal_text, "generators, e.g. \"x^2, x*y^3\"")
        ->required();
  cmd->add_option("--vars", c.vars, "declared variable order")->delimiter(',');
  cmd->add_option("--char", c.characteristic, "coefficient characteristic p");
  cmd->add_flag("--parametric", c.parametric, "allow the coefficient parameter t");
  cmd->add_option("--budget", c.budget, "state/cell budget for searches");
  cmd->add_option("--jobs", c.jobs, "worker threads for independent sweeps");
  cmd->add_flag("--pretty", c.pretty, "indent the JSON report");
}

text::IdealSpec parse_spec(const Common& c) {
  return text::build_ideal(text::parse_ideal_text(c.ideal_text), c.vars,
                           c.characteristic, c.parametric);
}

MonomialIdeal require_monomial(const text::IdealSpec& spec) {
  if (!spec.monomial)
    throw std::invalid_argument("this command needs a monomial ideal");
  return *spec.monomial;
}

json input_json(const Common& c, const text::IdealSpec& spec) {
  json in;
  in["ideal"] = c.ideal_text;
  in["vars"] = spec.vars;
  if (spec.characteristic) in["char"] = spec.characteristic;
  if (spec.parametric) in["parametric"] = true;
  return in;
}

NuOptions nu_options(const Common& c) {
  NuOptions o;
  if (c.budget > 0) o.max_states = c.budget;
  return o;
}

SigmaOptions sigma_options(const Common& c) {
  SigmaOptions o;
  if (c.budget > 0) o.grid.cell_budget = c.budget;
  return o;
}

void emit(const json& report, bool pretty) {
  if (pretty)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << report.dump() << "\n";
}

// ---- subcommand bodies ----------------------------------------------

json run_lct(const Common& c) {
  text::IdealSpec spec = parse_spec(c);
  MonomialIdeal I = require_monomial(spec);
  json rep;
  rep["command"] = "lct";
  rep["input"] = input_json(c, spec);
  rep["result"] = to_string(lct_monomial(I));
  rep["certificates"] = {{"mu", to_string(mu(NewtonPolytope(I)))}};
  return rep;
}

json run_nu(const Common& c, int e, const std::string& at_text) {
  if (c.characteristic == 0)
    throw std::invalid_argument("nu needs --char p");
  if (!is_small_prime(Int(c.characteristic)))
    throw std::invalid_argument("--char must be prime");
  if (e < 1) throw std::invalid_argument("nu needs --e >= 1");
  text::IdealSpec spec = parse_spec(c);
  Int q = pow(Int(c.characteristic), static_cast<unsigned>(e));

  json rep;
  rep["command"] = "nu";
  rep["input"] = input_json(c, spec);
  rep["input"]["e"] = e;

  std::size_t dim = spec.monomial ? spec.monomial->dim() : spec.polys[0].dim();
  MonomialIdeal J = maximal_power(dim, 1);
  if (!at_text.empty()) {
    auto jspec = text::build_ideal(text::parse_ideal_text(at_text), spec.vars,
                                   0, false);
    J = require_monomial(jspec);
    rep["input"]["at"] = at_text;
  }

  Int nu;
  if (spec.monomial) {
    nu = nu_monomial(*spec.monomial, J, q, nu_options(c));
  } else {
    NuPolyOptions o;
    if (c.budget > 0) o.max_states = c.budget;
    nu = nu_poly(spec.polys, J, Int(c.characteristic), e, o);
  }
  rep["result"] = int_json(nu);
  rep["certificates"] = {{"q", int_json(q)},
                         {"bracket", {to_string(Rat(nu, q)), to_string(Rat(nu + 1, q))}}};
  return rep;
}

json run_fpt_bracket(const Common& c, int e_max) {
  if (c.characteristic == 0)
    throw std::invalid_argument("fpt-bracket needs --char p");
  text::IdealSpec spec = parse_spec(c);
  MonomialIdeal I = require_monomial(spec);
  auto entries = fpt_bracket_monomial(I, Int(c.characteristic), e_max,
                                      nu_options(c), c.jobs);
  json rep;
  rep["command"] = "fpt-bracket";
  rep["input"] = input_json(c, spec);
  rep["input"]["e"] = e_max;
  json list = json::array();
  for (const auto& ent : entries) {
    json e;
    e["e"] = ent.e;
    e["q"] = int_json(ent.q);
    e["nu"] = int_json(ent.nu);
    e["bracket"] = {to_string(ent.lower), to_string(ent.upper)};
    e["contains_threshold"] = ent.contains_threshold;
    list.push_back(e);
  }
  rep["result"] = list;
  rep["certificates"] = {{"threshold", to_string(lct_monomial(I))}};
  return rep;
}

json run_closure(const Common& c) {
  text::IdealSpec spec = parse_spec(c);
  MonomialIdeal I = require_monomial(spec);
  MonomialIdeal C = integral_closure(I);
  json rep;
  rep["command"] = "closure";
  rep["input"] = input_json(c, spec);
  rep["result"] = text::format_ideal(C, spec.vars);
  json gens = json::array();
  for (const ExpVec& g : C.gens()) gens.push_back(ivec_json(g));
  rep["certificates"] = {{"generators", gens}};
  return rep;
}

json run_mult(const Common& c) {
  text::IdealSpec spec = parse_spec(c);
  MonomialIdeal I = require_monomial(spec);
  json rep;
  rep["command"] = "mult";
  rep["input"] = input_json(c, spec);
  rep["result"] = int_json(hilbert_samuel(I, sigma_options(c).grid));
  return rep;
}

json run_mixed(const Common& c) {
  text::IdealSpec spec = parse_spec(c);
  MonomialIdeal I = require_monomial(spec);
  std::vector<Int> e = mixed_multiplicities(I, sigma_options(c).grid);
  json rep;
  rep["command"] = "mixed";
  rep["input"] = input_json(c, spec);
  rep["result"] = ivec_json(e);
  rep["certificates"] = {{"log_convex", minkowski_check(e)}};
  return rep;
}

json run_sigma(const Common& c, std::size_t j) {
  text::IdealSpec spec = parse_spec(c);
  MonomialIdeal I = require_monomial(spec);
  auto v = sigma(I, j, sigma_options(c));
  json rep;
  rep["command"] = "sigma";
  rep["input"] = input_json(c, spec);
  rep["input"]["j"] = j;
  rep["result"] = v ? int_json(*v) : json("infinity");
  return rep;
}

json run_dp(const Common& c, std::size_t l) {
  text::IdealSpec spec = parse_spec(c);
  MonomialIdeal I = require_monomial(spec);
  json rep;
  rep["command"] = "dp";
  rep["input"] = input_json(c, spec);
  rep["input"]["l"] = l;
  rep["result"] = to_string(multiplicity_lower_bound(I, l, sigma_options(c)));
  rep["certificates"] = {{"sigma", ivec_json(sigma_vector(I, l, sigma_options(c)))}};
  return rep;
}

json run_check_bound(const Common& c, std::size_t l) {
  text::IdealSpec spec = parse_spec(c);
  MonomialIdeal I = require_monomial(spec);
  BoundReport r = check_bound(I, l, sigma_options(c));
  json rep;
  rep["command"] = "check-bound";
  rep["input"] = input_json(c, spec);
  rep["input"]["l"] = l;
  rep["result"] = {{"lower", to_string(r.lower)},
                   {"threshold", to_string(r.threshold)},
                   {"slack", to_string(r.slack)},
                   {"equality", r.equality}};
  return rep;
}

json run_classify(const Common& c, std::size_t l) {
  text::IdealSpec spec = parse_spec(c);
  MonomialIdeal I = require_monomial(spec);
  json rep;
  rep["command"] = "classify";
  rep["input"] = input_json(c, spec);
  rep["input"]["l"] = l;
  BoundReport r = check_bound(I, l, sigma_options(c));
  json res;
  res["applicable"] = r.equality;
  if (!r.equality) {
    res["reason"] = "threshold exceeds the lower bound by " + to_string(r.slack);
  } else {
    auto w = classify_equality(I, l, sigma_options(c));
    res["found"] = w.has_value();
    if (w) {
      json vars = json::array();
      for (std::size_t v : w->variables) vars.push_back(spec.vars[v]);
      res["variables"] = vars;
      res["degrees"] = ivec_json(w->degrees);
    }
  }
  rep["result"] = res;
  return rep;
}

json run_lojasiewicz(const Common& c) {
  text::IdealSpec spec = parse_spec(c);
  MonomialIdeal I = require_monomial(spec);
  auto L = lojasiewicz_exponent(I);
  json rep;
  rep["command"] = "lojasiewicz";
  rep["input"] = input_json(c, spec);
  rep["result"] = L ? int_json(*L) : json("infinity");
  return rep;
}

json run_colon_check(std::size_t n, const Int& q, const Int& t,
                     const std::vector<std::string>& weights,
                     const std::string& bound) {
  json rep;
  rep["command"] = "colon-check";
  if (!weights.empty()) {
    MonomialValuation v;
    for (const std::string& w : weights) {
      auto r = parse_rational(w);
      if (!r) throw std::invalid_argument("bad weight " + w);
      v.weights.push_back(*r);
    }
    auto b = parse_rational(bound.empty() ? "0" : bound);
    if (!b) throw std::invalid_argument("bad bound " + bound);
    rep["input"] = {{"weights", weights}, {"q", int_json(q)}, {"bound", bound.empty() ? "0" : bound}};
    bool ok = valuation_colon_check(v, q, *b);
    rep["result"] = {{"agrees", ok}};
    MonomialIdeal lhs = colon(frobenius_power(v.weights.size(), q),
                              valuation_ideal(v, *b, false));
    rep["certificates"] = {
        {"colon", text::format_ideal(lhs, text::default_var_names(v.weights.size()))}};
    return rep;
  }
  if (n == 0) throw std::invalid_argument("colon-check needs --n or --weights");
  if (t < 1) throw std::invalid_argument("colon-check needs --t >= 1");
  MonomialIdeal formula = colon_frobenius_maximal(n, q, t);
  MonomialIdeal direct = colon(frobenius_power(n, q), maximal_power(n, t));
  rep["input"] = {{"n", n}, {"q", int_json(q)}, {"t", int_json(t)}};
  rep["result"] = {{"agrees", formula == direct}};
  rep["certificates"] = {
      {"colon", text::format_ideal(formula, text::default_var_names(n))}};
  return rep;
}

json order_json(const DegenerationOrder& ord) {
  json j;
  json w = json::array();
  for (const Int& cf : ord.weights) w.push_back(int_json(cf));
  j["weights"] = w;
  j["m"] = static_cast<std::int64_t>(ord.m_index + 1);
  json layers = json::array();
  for (const WeightLayer& l : ord.layers) {
    json lj;
    lj["parameter"] = to_string(l.parameter);
    json cs = json::array();
    for (const Rat& cf : l.coeffs) cs.push_back(to_string(cf));
    lj["coeffs"] = cs;
    layers.push_back(lj);
  }
  j["layers"] = layers;
  return j;
}

json run_degenerate_order(const std::string& dtext, const std::string& stext) {
  DegenerationInput in;
  {
    std::stringstream ss(dtext);
    std::string piece;
    while (std::getline(ss, piece, ','))
      in.degrees.push_back(Int(piece));
  }
  in.groups.assign(in.degrees.size(), {});
  std::stringstream groups(stext);
  std::string group;
  while (std::getline(groups, group, ';')) {
    auto colon_at = group.find(':');
    if (colon_at == std::string::npos)
      throw std::invalid_argument("group syntax is i:v1,...,vr|v1,...,vr");
    std::size_t gi = std::stoul(group.substr(0, colon_at));
    if (gi < 1 || gi > in.degrees.size())
      throw std::invalid_argument("group index out of range");
    std::stringstream vecs(group.substr(colon_at + 1));
    std::string vec;
    while (std::getline(vecs, vec, '|')) {
      ExpVec u;
      std::stringstream cs(vec);
      std::string comp;
      while (std::getline(cs, comp, ',')) u.push_back(Int(comp));
      in.groups[gi - 1].push_back(std::move(u));
    }
  }
  std::vector<std::string> bad = validate_input(in);
  json rep;
  rep["command"] = "degenerate";
  rep["input"] = {{"degrees", dtext}, {"groups", stext}};
  if (!bad.empty()) {
    rep["result"] = {{"valid", false}, {"violations", bad}};
    return rep;
  }
  DegenerationOrder ord = degeneration_order(in);
  json res = order_json(ord);
  res["valid"] = true;
  rep["result"] = res;
  return rep;
}

json run_degenerate_ideal(const std::string& path) {
  json doc;
  if (path == "-") {
    std::cin >> doc;
  } else {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    f >> doc;
  }
  std::uint32_t p = doc.at("char").get<std::uint32_t>();
  std::vector<std::string> vars;
  std::vector<std::size_t> sizes;
  for (const auto& b : doc.at("blocks")) {
    const auto& vs = b.at("vars");
    sizes.push_back(vs.size());
    for (const auto& v : vs) vars.push_back(v.get<std::string>());
  }
  std::vector<DegenerationBlock> blocks;
  std::size_t bi = 0;
  for (const auto& b : doc.at("blocks")) {
    DegenerationBlock blk;
    blk.degree = Int(b.at("degree").get<long>());
    blk.num_vars = sizes[bi++];
    for (const auto& g : b.at("gens")) {
      auto spec = text::build_ideal(
          text::parse_ideal_text(g.get<std::string>()), vars, p, true);
      if (spec.monomial) {
        // single-monomial generators come back through the monomial route
        SparsePoly f(p, vars.size());
        for (const ExpVec& e : spec.monomial->gens()) {
          SparsePoly::Exps ee(e.size());
          for (std::size_t i = 0; i < e.size(); ++i)
            ee[i] = static_cast<std::int64_t>(e[i]);
          f.add_term(ee, FpCoeff::scalar(p, 1));
        }
        blk.gens.push_back(std::move(f));
      } else {
        if (spec.polys.size() != 1)
          throw std::invalid_argument("one generator per entry");
        blk.gens.push_back(spec.polys[0]);
      }
    }
    blocks.push_back(std::move(blk));
  }
  DegeneratedIdeal out = degenerate_ideal(blocks);
  json rep;
  rep["command"] = "degenerate";
  rep["input"] = {{"file", path}};
  json res;
  res["m"] = static_cast<std::int64_t>(out.m_index + 1);
  json outblocks = json::array();
  for (const DegenerationBlock& b : out.blocks) {
    json fb = json::array();
    for (const SparsePoly& g : b.gens) fb.push_back(text::format_poly(g, vars));
    outblocks.push_back(fb);
  }
  res["initial_forms"] = outblocks;
  res["order"] = order_json(out.order);
  rep["result"] = res;
  return rep;
}

json run_examples(bool emit_expected, bool pretty) {
  json computed = examples::compute_all();
  if (emit_expected) {
    std::cout << computed.dump(2) << "\n";
    std::exit(0);
  }
  json expected = json::parse(examples::expected_json_text());
  json rep;
  rep["command"] = "paper-examples";
  rep["input"] = json::object();
  json checks = json::array();
  bool all_ok = !expected.empty();
  for (const auto& [key, value] : expected.items()) {
    bool ok = computed.contains(key) && computed[key] == value;
    all_ok &= ok;
    checks.push_back({{"section", key}, {"pass", ok}});
    std::cerr << (ok ? "PASS " : "FAIL ") << key << "\n";
  }
  rep["result"] = {{"pass", all_ok}};
  rep["certificates"] = {{"checks", checks}};
  if (!all_ok) {
    emit(rep, pretty);
    std::exit(1);
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact singularity-threshold invariants of monomial ideals"};
  app.require_subcommand(1);

  Common c;
  int e_level = 1;
  std::size_t j_index = 1, l_index = 1, n_vars = 0;
  std::string at_text, d_text, s_text, input_path, bound_text;
  std::vector<std::string> weight_text;
  std::int64_t q_val = 2, t_val = 1;
  bool emit_expected = false;

  auto* lct = app.add_subcommand("lct", "log canonical threshold");
  add_common(lct, c);
  auto* nu = app.add_subcommand("nu", "largest power outside a Frobenius power");
  add_common(nu, c);
  nu->add_option("--e", e_level, "exponent e of q = p^e");
  nu->add_option("--at", at_text, "monomial ideal J (default: maximal ideal)");
  auto* fpt = app.add_subcommand("fpt-bracket", "nu sequence with brackets");
  add_common(fpt, c);
  fpt->add_option("--e", e_level, "largest exponent e");
  auto* clo = app.add_subcommand("closure", "integral closure");
  add_common(clo, c);
  auto* mult = app.add_subcommand("mult", "Hilbert-Samuel multiplicity");
  add_common(mult, c);
  auto* mixed = app.add_subcommand("mixed", "mixed multiplicities");
  add_common(mixed, c);
  auto* sig = app.add_subcommand("sigma", "stabilized mixed multiplicity");
  add_common(sig, c);
  sig->add_option("--j", j_index, "index j");
  auto* dp = app.add_subcommand("dp", "multiplicity lower bound");
  add_common(dp, c);
  dp->add_option("--l", l_index, "number of terms l");
  auto* chk = app.add_subcommand("check-bound", "compare bound and threshold");
  add_common(chk, c);
  chk->add_option("--l", l_index, "number of terms l");
  auto* cls = app.add_subcommand("classify", "equality-case witness search");
  add_common(cls, c);
  cls->add_option("--l", l_index, "number of terms l");
  auto* loj = app.add_subcommand("lojasiewicz", "Lojasiewicz exponent");
  add_common(loj, c);
  auto* col = app.add_subcommand("colon-check", "colon formula verification");
  add_common(col, c, false);
  col->add_option("--n", n_vars, "number of variables (maximal-ideal form)");
  col->add_option("--q", q_val, "Frobenius exponent q");
  col->add_option("--t", t_val, "power t of the maximal ideal");
  col->add_option("--weights", weight_text, "valuation weights")->delimiter(',');
  col->add_option("--l,--bound", bound_text, "valuation cutoff");
  auto* deg = app.add_subcommand("degenerate", "weight-order degeneration");
  add_common(deg, c, false);
  deg->add_option("--d", d_text, "degrees, e.g. 2,3,4,5");
  deg->add_option("--s", s_text, "vector groups, e.g. \"2:1,0,0,2;3:0,2,0,2\"");
  deg->add_option("--input", input_path, "JSON block description (or - for stdin)");
  auto* ex = app.add_subcommand("paper-examples", "built-in worked examples");
  add_common(ex, c, false);
  ex->add_flag("--emit-expected", emit_expected,
               "print the computed golden data and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    json rep;
    if (lct->parsed()) rep = run_lct(c);
    else if (nu->parsed()) rep = run_nu(c, e_level, at_text);
    else if (fpt->parsed()) rep = run_fpt_bracket(c, e_level);
    else if (clo->parsed()) rep = run_closure(c);
    else if (mult->parsed()) rep = run_mult(c);
    else if (mixed->parsed()) rep = run_mixed(c);
    else if (sig->parsed()) rep = run_sigma(c, j_index);
    else if (dp->parsed()) rep = run_dp(c, l_index);
    else if (chk->parsed()) rep = run_check_bound(c, l_index);
    else if (cls->parsed()) rep = run_classify(c, l_index);
    else if (loj->parsed()) rep = run_lojasiewicz(c);
    else if (col->parsed())
      rep = run_colon_check(n_vars, Int(q_val), Int(t_val), weight_text, bound_text);
    else if (deg->parsed()) {
      if (!input_path.empty())
        rep = run_degenerate_ideal(input_path);
      else
        rep = run_degenerate_order(d_text, s_text);
    } else if (ex->parsed()) {
      rep = run_examples(emit_expected, c.pretty);
    }
    emit(rep, c.pretty);
    return 0;
  } catch (const text::InputError& e) {
    json err;
    err["error"] = {{"kind", "parse"},
                    {"position", e.position},
                    {"message", e.message}};
    emit(err, c.pretty);
    return 2;
  } catch (const BudgetError& e) {
    json err;
    err["error"] = {{"kind", "budget"}, {"message", e.what()}};
    err["partial_lower_bound"] = e.partial;
    emit(err, c.pretty);
    return 1;
  } catch (const std::exception& e) {
    json err;
    err["error"] = {{"kind", "computation"}, {"message", e.what()}};
    emit(err, c.pretty);
    return 1;
  }
}
