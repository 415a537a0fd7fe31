#include "newton/charp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "newton/errors.hpp"

namespace newton {

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = base % p;
  while (exp) {
    if (exp & 1) r = r * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

FpCoeff::FpCoeff(std::uint32_t p, std::vector<std::uint32_t> c)
    : p_(p), coeffs_(std::move(c)) {
  if (p_ < 2) throw std::invalid_argument("characteristic must be >= 2");
  for (auto& v : coeffs_) v %= p_;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpCoeff FpCoeff::scalar(std::uint32_t p, std::uint64_t value) {
  return FpCoeff(p, {static_cast<std::uint32_t>(value % p)});
}

FpCoeff FpCoeff::parameter_power(std::uint32_t p, std::size_t k,
                                 std::uint64_t scale) {
  std::vector<std::uint32_t> c(k + 1, 0);
  c[k] = static_cast<std::uint32_t>(scale % p);
  return FpCoeff(p, std::move(c));
}

FpCoeff FpCoeff::operator+(const FpCoeff& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (p_ != o.p_) throw std::invalid_argument("characteristic mismatch");
  std::vector<std::uint32_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    c[i] = (c[i] + o.coeffs_[i]) % p_;
  return FpCoeff(p_, std::move(c));
}

FpCoeff FpCoeff::operator*(const FpCoeff& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  if (p_ != o.p_) throw std::invalid_argument("characteristic mismatch");
  std::vector<std::uint32_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>(
          (c[i + j] + static_cast<std::uint64_t>(coeffs_[i]) * o.coeffs_[j]) % p_);
  }
  return FpCoeff(p_, std::move(c));
}

FpCoeff FpCoeff::unit_normalized() const {
  if (is_zero()) return *this;
  std::size_t low = 0;
  while (coeffs_[low] == 0) ++low;
  std::uint32_t inv = mod_pow(coeffs_[low], p_ - 2, p_);  // p prime
  std::vector<std::uint32_t> c(coeffs_);
  for (auto& v : c)
    v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * inv % p_);
  return FpCoeff(p_, std::move(c));
}

std::string FpCoeff::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(coeffs_[i]);
    } else {
      if (coeffs_[i] != 1) out += std::to_string(coeffs_[i]) + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

SparsePoly SparsePoly::monomial(std::uint32_t p, Exps e, FpCoeff c) {
  SparsePoly f(p, e.size());
  f.add_term(e, c);
  return f;
}

void SparsePoly::add_term(const Exps& e, const FpCoeff& c) {
  if (e.size() != dim_) throw std::invalid_argument("exponent length mismatch");
  for (std::int64_t x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  if (c.is_zero()) return;
  if (c.characteristic() != p_)
    throw std::invalid_argument("characteristic mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  FpCoeff s = it->second + c;
  if (s.is_zero())
    terms_.erase(it);
  else
    it->second = s;
}

SparsePoly poly_sum(const SparsePoly& f, const SparsePoly& g) {
  if (f.characteristic() != g.characteristic() || f.dim() != g.dim())
    throw std::invalid_argument("polynomial shape mismatch");
  SparsePoly out(f.characteristic(), f.dim());
  for (const auto& [e, c] : f.terms()) out.add_term(e, c);
  for (const auto& [e, c] : g.terms()) out.add_term(e, c);
  return out;
}

SparsePoly poly_mul(const SparsePoly& f, const SparsePoly& g) {
  if (f.characteristic() != g.characteristic() || f.dim() != g.dim())
    throw std::invalid_argument("polynomial shape mismatch");
  SparsePoly out(f.characteristic(), f.dim());
  SparsePoly::Exps e(f.dim());
  for (const auto& [ef, cf] : f.terms())
    for (const auto& [eg, cg] : g.terms()) {
      for (std::size_t i = 0; i < f.dim(); ++i) e[i] = ef[i] + eg[i];
      out.add_term(e, cf * cg);
    }
  return out;
}

SparsePoly poly_pow(const SparsePoly& f, std::uint64_t k) {
  SparsePoly acc = SparsePoly::monomial(
      f.characteristic(), SparsePoly::Exps(f.dim(), 0),
      FpCoeff::scalar(f.characteristic(), 1));
  SparsePoly base = f;
  while (k) {
    if (k & 1) acc = poly_mul(acc, base);
    k >>= 1;
    if (k) base = poly_mul(base, base);
  }
  return acc;
}

SparsePoly reduce_mod_frobenius(const SparsePoly& f, const MonomialIdeal& J,
                                const Int& q) {
  if (J.dim() != f.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<SparsePoly::Exps> scaled;
  for (const ExpVec& g : J.gens()) {
    SparsePoly::Exps v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      Int s = q * g[i];
      if (s > 1'000'000'000'000ll)
        throw std::invalid_argument("Frobenius exponent out of range");
      v[i] = static_cast<std::int64_t>(s);
    }
    scaled.push_back(std::move(v));
  }
  SparsePoly out(f.characteristic(), f.dim());
  for (const auto& [e, c] : f.terms()) {
    bool inside = false;
    for (const auto& s : scaled) {
      bool leq = true;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (s[i] > e[i]) {
          leq = false;
          break;
        }
      if (leq) {
        inside = true;
        break;
      }
    }
    if (!inside) out.add_term(e, c);
  }
  return out;
}

SparsePoly initial_form(const SparsePoly& f, const std::vector<Int>& weights) {
  if (f.is_zero())
    throw std::invalid_argument("initial form of the zero polynomial");
  if (weights.size() != f.dim())
    throw std::invalid_argument("weight length mismatch");
  bool first = true;
  Int best = 0;
  for (const auto& [e, c] : f.terms()) {
    Int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += weights[i] * e[i];
    if (first || w > best) best = w;
    first = false;
  }
  SparsePoly out(f.characteristic(), f.dim());
  for (const auto& [e, c] : f.terms()) {
    Int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += weights[i] * e[i];
    if (w == best) out.add_term(e, c);
  }
  return out;
}

namespace {

// Canonical key of a residue, up to the F_p unit normalizing its least
// term. Scalar multiples have identical futures in the nu walk.
std::string residue_key(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  const auto& lead = f.terms().begin()->second.coeffs();
  std::size_t low = 0;
  while (lead[low] == 0) ++low;
  FpCoeff scale = FpCoeff::scalar(
      f.characteristic(),
      mod_pow(lead[low], f.characteristic() - 2, f.characteristic()));
  std::string key;
  for (const auto& [e, c] : f.terms()) {
    for (std::int64_t x : e) key += std::to_string(x) + ",";
    FpCoeff nc = c * scale;
    for (std::uint32_t v : nc.coeffs()) key += std::to_string(v) + ".";
    key += ";";
  }
  return key;
}

}  // namespace

Int nu_poly(const std::vector<SparsePoly>& gens, const MonomialIdeal& J,
            const Int& p, int e, const NuPolyOptions& opts) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  if (e < 1) throw std::invalid_argument("e must be >= 1");
  if (!is_m_primary(J)) throw std::invalid_argument("J must be m-primary");
  const std::uint32_t pc = gens.front().characteristic();
  if (Int(pc) != p) throw std::invalid_argument("characteristic mismatch");
  // unit normalization in the state keys inverts scalars mod p
  for (std::uint32_t f = 2; f * f <= pc; ++f)
    if (pc % f == 0) throw std::invalid_argument("characteristic must be prime");
  MonomialIdeal radJ = radical(J);
  for (const SparsePoly& f : gens) {
    if (f.is_zero()) throw std::invalid_argument("zero generator");
    if (f.characteristic() != pc || f.dim() != J.dim())
      throw std::invalid_argument("generator shape mismatch");
    for (const auto& [exps, c] : f.terms()) {
      ExpVec u(exps.size());
      for (std::size_t i = 0; i < exps.size(); ++i) u[i] = exps[i];
      if (!contains_monomial(radJ, u))
        throw std::invalid_argument(
            "nu is unbounded: a generator term escapes the radical of J");
    }
  }

  const Int q = pow(p, static_cast<unsigned>(e));
  SparsePoly one = SparsePoly::monomial(pc, SparsePoly::Exps(J.dim(), 0),
                                        FpCoeff::scalar(pc, 1));

  std::vector<SparsePoly> frontier{one};
  std::int64_t level = 0;
  std::int64_t visited = 1;
  while (!frontier.empty()) {
    std::vector<SparsePoly> next;
    std::set<std::string> seen;
    for (const SparsePoly& f : frontier) {
      for (const SparsePoly& g : gens) {
        SparsePoly prod = reduce_mod_frobenius(poly_mul(f, g), J, q);
        if (prod.is_zero()) continue;
        if (seen.insert(residue_key(prod)).second) next.push_back(std::move(prod));
      }
    }
    visited += static_cast<std::int64_t>(next.size());
    if (visited > opts.max_states)
      throw BudgetError("nu_poly state budget exceeded", level);
    if (next.empty()) break;
    frontier.swap(next);
    ++level;
  }
  return Int(level);
}

}  // namespace newton
