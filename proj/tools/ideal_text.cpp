#include "ideal_text.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace newton::text {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_space();
    return pos >= s.size();
  }
  char peek() {
    skip_space();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_space();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw InputError{pos, msg};
  }

  std::uint64_t number() {
    skip_space();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected a number");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > 1'000'000'000'000ull) fail("number too large");
      ++pos;
    }
    return v;
  }

  std::string identifier() {
    skip_space();
    std::string id;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      if (id.empty() && std::isdigit(static_cast<unsigned char>(s[pos]))) break;
      id += s[pos++];
    }
    if (id.empty()) fail("expected a variable name");
    return id;
  }
};

Term parse_term(Cursor& c) {
  Term t;
  for (;;) {
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      t.scalar *= c.number();
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string id = c.identifier();
      std::int64_t exp = 1;
      if (c.accept('^')) exp = static_cast<std::int64_t>(c.number());
      if (id == "t") {
        t.t_power += static_cast<std::size_t>(exp);
      } else {
        t.exponents[id] += exp;
      }
    } else {
      c.fail("expected a factor");
    }
    if (!c.accept('*')) break;
  }
  return t;
}

}  // namespace

ParsedIdeal parse_ideal_text(const std::string& input) {
  Cursor c{input};
  ParsedIdeal out;
  if (c.eof()) c.fail("empty ideal");
  for (;;) {
    std::vector<Term> gen;
    gen.push_back(parse_term(c));
    while (c.accept('+')) gen.push_back(parse_term(c));
    out.generators.push_back(std::move(gen));
    if (!c.accept(',')) break;
  }
  if (!c.eof()) c.fail("trailing input after ideal");
  return out;
}

std::vector<std::string> default_var_names(std::size_t n) {
  static const char* four[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(n <= 4 ? four[i] : "x" + std::to_string(i + 1));
  return names;
}

namespace {

// Rank for inferred variable ordering: the canonical names first, then
// everything else alphabetically.
std::pair<int, std::string> var_rank(const std::string& name) {
  if (name == "x") return {0, name};
  if (name == "y") return {1, name};
  if (name == "z") return {2, name};
  if (name == "w") return {3, name};
  if (name.size() >= 2 && name[0] == 'x' &&
      std::all_of(name.begin() + 1, name.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return {4 + std::stoi(name.substr(1)), name};
  return {1'000'000, name};
}

}  // namespace

IdealSpec build_ideal(const ParsedIdeal& parsed,
                      const std::vector<std::string>& declared_vars,
                      std::uint32_t characteristic, bool parametric) {
  if (parametric && characteristic == 0)
    throw InputError{0, "parametric coefficients require a positive characteristic"};

  IdealSpec spec;
  spec.characteristic = characteristic;
  spec.parametric = parametric;

  if (!declared_vars.empty()) {
    spec.vars = declared_vars;
    std::set<std::string> known(declared_vars.begin(), declared_vars.end());
    for (const auto& gen : parsed.generators)
      for (const Term& t : gen)
        for (const auto& [name, e] : t.exponents)
          if (!known.count(name)) throw InputError{0, "unknown variable " + name};
  } else {
    std::set<std::string> seen;
    for (const auto& gen : parsed.generators)
      for (const Term& t : gen)
        for (const auto& [name, e] : t.exponents) seen.insert(name);
    spec.vars.assign(seen.begin(), seen.end());
    std::sort(spec.vars.begin(), spec.vars.end(),
              [](const std::string& a, const std::string& b) {
                return var_rank(a) < var_rank(b);
              });
    if (spec.vars.empty()) spec.vars = {"x"};  // constant generators only
  }

  const std::size_t n = spec.vars.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[spec.vars[i]] = i;

  bool monomial_only = true;
  for (const auto& gen : parsed.generators) {
    std::size_t live_terms = 0;
    for (const Term& t : gen) {
      bool zero = characteristic > 0 ? (t.scalar % characteristic == 0)
                                     : (t.scalar == 0);
      if (!zero) ++live_terms;
      if (t.t_power > 0) monomial_only = false;
    }
    if (live_terms > 1) monomial_only = false;
  }

  if (monomial_only) {
    std::vector<ExpVec> gens;
    for (const auto& gen : parsed.generators)
      for (const Term& t : gen) {
        bool zero = characteristic > 0 ? (t.scalar % characteristic == 0)
                                       : (t.scalar == 0);
        if (zero) continue;
        ExpVec e(n, 0);
        for (const auto& [name, exp] : t.exponents)
          e[index[name]] += exp;
        gens.push_back(std::move(e));
      }
    spec.monomial = MonomialIdeal(n, std::move(gens));
    return spec;
  }

  if (characteristic == 0)
    throw InputError{0, "polynomial generators require --char p"};
  for (const auto& gen : parsed.generators) {
    SparsePoly f(characteristic, n);
    for (const Term& t : gen) {
      if (t.t_power > 0 && !parametric)
        throw InputError{0, "parameter t requires --parametric"};
      SparsePoly::Exps e(n, 0);
      for (const auto& [name, exp] : t.exponents)
        e[index[name]] += exp;
      f.add_term(e, FpCoeff::parameter_power(characteristic, t.t_power,
                                             t.scalar % characteristic));
    }
    spec.polys.push_back(std::move(f));
  }
  return spec;
}

std::string format_monomial(const ExpVec& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] != 1) out += "^" + e[i].str();
  }
  return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& I, const std::vector<std::string>& vars) {
  if (I.is_zero()) return "0";
  std::string out;
  for (const ExpVec& g : I.gens()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g, vars);
  }
  return out;
}

std::string format_poly(const SparsePoly& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    ExpVec ee(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ee[i] = e[i];
    std::string mono = format_monomial(ee, vars);
    std::string coeff = c.str();
    bool needs_parens = coeff.find('+') != std::string::npos;
    if (coeff == "1") {
      out += mono;
    } else if (needs_parens) {
      out += "(" + coeff + ")*" + mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace newton::text
