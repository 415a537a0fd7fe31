#include "newton/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "newton/errors.hpp"

namespace newton {

Int total_degree(const ExpVec& u) {
  Int d = 0;
  for (const Int& c : u) d += c;
  return d;
}

bool divides(const ExpVec& g, const ExpVec& u) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] > u[i]) return false;
  return true;
}

ExpVec vec_sum(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExpVec vec_max(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

ExpVec vec_sub_clamped(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] > b[i] ? a[i] - b[i] : Int(0);
  return r;
}

MonomialIdeal::MonomialIdeal(std::size_t dim, std::vector<ExpVec> raw)
    : dim_(dim) {
  for (const ExpVec& v : raw) {
    if (v.size() != dim)
      throw std::invalid_argument("exponent vector length != ambient dimension");
    for (const Int& c : v)
      if (c < 0) throw std::invalid_argument("negative exponent");
  }
  // Sort by total degree, then lex: any divisor of a candidate is
  // already among the kept elements when the candidate is examined.
  std::sort(raw.begin(), raw.end(), [](const ExpVec& a, const ExpVec& b) {
    Int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  for (const ExpVec& v : raw) {
    bool redundant = false;
    for (const ExpVec& kept : gens_)
      if (divides(kept, v)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(v);
  }
  std::sort(gens_.begin(), gens_.end());
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && total_degree(gens_[0]) == 0;
}

Int MonomialIdeal::max_degree() const {
  Int d = 0;
  for (const ExpVec& g : gens_) d = std::max(d, total_degree(g));
  return d;
}

Int MonomialIdeal::min_degree() const {
  if (gens_.empty()) return 0;
  Int d = total_degree(gens_[0]);
  for (const ExpVec& g : gens_) d = std::min(d, total_degree(g));
  return d;
}

MonomialIdeal minimalize(std::size_t dim, std::vector<ExpVec> raw) {
  return MonomialIdeal(dim, std::move(raw));
}

static void require_same_dim(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim() != J.dim())
    throw std::invalid_argument("ambient dimension mismatch");
}

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  std::vector<ExpVec> prods;
  prods.reserve(I.gens().size() * J.gens().size());
  for (const ExpVec& a : I.gens())
    for (const ExpVec& b : J.gens()) prods.push_back(vec_sum(a, b));
  return MonomialIdeal(I.dim(), std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& I, const Int& t) {
  if (t < 0) throw std::invalid_argument("negative power");
  MonomialIdeal acc = MonomialIdeal::unit(I.dim());
  for (Int k = 0; k < t; ++k) acc = multiply(acc, I);
  return acc;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  std::vector<ExpVec> all = I.gens();
  all.insert(all.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal(I.dim(), std::move(all));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  std::vector<ExpVec> meets;
  meets.reserve(I.gens().size() * J.gens().size());
  for (const ExpVec& a : I.gens())
    for (const ExpVec& b : J.gens()) meets.push_back(vec_max(a, b));
  return MonomialIdeal(I.dim(), std::move(meets));
}

bool ideal_contains(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  for (const ExpVec& b : J.gens())
    if (!contains_monomial(I, b)) return false;
  return true;
}

bool contains_monomial(const MonomialIdeal& I, const ExpVec& u) {
  if (u.size() != I.dim())
    throw std::invalid_argument("ambient dimension mismatch");
  for (const ExpVec& g : I.gens())
    if (divides(g, u)) return true;
  return false;
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  if (J.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  // (I : J) = intersection over generators g of J of (I : x^g).
  bool first = true;
  MonomialIdeal acc = MonomialIdeal::unit(I.dim());
  for (const ExpVec& g : J.gens()) {
    std::vector<ExpVec> shifted;
    shifted.reserve(I.gens().size());
    for (const ExpVec& h : I.gens()) shifted.push_back(vec_sub_clamped(h, g));
    MonomialIdeal part(I.dim(), std::move(shifted));
    acc = first ? part : intersect(acc, part);
    first = false;
  }
  return acc;
}

MonomialIdeal frobenius_power(std::size_t dim, const Int& q) {
  if (q < 1) throw std::invalid_argument("Frobenius power requires q >= 1");
  std::vector<ExpVec> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    ExpVec v(dim, 0);
    v[i] = q;
    gens.push_back(std::move(v));
  }
  return MonomialIdeal(dim, std::move(gens));
}

MonomialIdeal frobenius_power(const MonomialIdeal& J, const Int& q) {
  if (q < 1) throw std::invalid_argument("Frobenius power requires q >= 1");
  std::vector<ExpVec> gens;
  gens.reserve(J.gens().size());
  for (const ExpVec& g : J.gens()) {
    ExpVec v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = q * g[i];
    gens.push_back(std::move(v));
  }
  return MonomialIdeal(J.dim(), std::move(gens));
}

MonomialIdeal maximal_power(std::size_t dim, const Int& t) {
  if (t < 0) throw std::invalid_argument("negative power");
  if (t == 0) return MonomialIdeal::unit(dim);
  std::vector<ExpVec> gens;
  ExpVec cur(dim, 0);
  // Enumerate all compositions of t into dim parts.
  auto rec = [&](auto&& self, std::size_t pos, Int left) -> void {
    if (pos + 1 == dim) {
      cur[pos] = left;
      gens.push_back(cur);
      return;
    }
    for (Int c = 0; c <= left; ++c) {
      cur[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  if (dim == 0) throw std::invalid_argument("zero-dimensional ring");
  rec(rec, 0, t);
  return MonomialIdeal(dim, std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<ExpVec> gens;
  gens.reserve(I.gens().size());
  for (const ExpVec& g : I.gens()) {
    ExpVec v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = g[i] > 0 ? 1 : 0;
    gens.push_back(std::move(v));
  }
  return MonomialIdeal(I.dim(), std::move(gens));
}

std::optional<Int> pure_power_exponent(const MonomialIdeal& I, std::size_t i) {
  std::optional<Int> best;
  for (const ExpVec& g : I.gens()) {
    bool pure = g[i] > 0;
    for (std::size_t j = 0; pure && j < g.size(); ++j)
      if (j != i && g[j] > 0) pure = false;
    if (pure && (!best || g[i] < *best)) best = g[i];
  }
  return best;
}

int codimension(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("codimension of the zero ideal");
  if (I.is_unit()) throw std::invalid_argument("codimension of the unit ideal");
  const std::size_t n = I.dim();
  if (n > 20) throw std::invalid_argument("dimension too large for hitting-set search");
  std::vector<std::uint32_t> supports;
  supports.reserve(I.gens().size());
  for (const ExpVec& g : I.gens()) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] > 0) mask |= (1u << i);
    supports.push_back(mask);
  }
  for (int size = 1; size <= static_cast<int>(n); ++size) {
    for (std::uint32_t set = 0; set < (1u << n); ++set) {
      if (std::popcount(set) != size) continue;
      bool hits_all = true;
      for (std::uint32_t s : supports)
        if ((s & set) == 0) {
          hits_all = false;
          break;
        }
      if (hits_all) return size;
    }
  }
  throw std::logic_error("no hitting set found for a proper nonzero ideal");
}

bool is_m_primary(const MonomialIdeal& I) {
  if (!I.is_proper()) return false;
  for (std::size_t i = 0; i < I.dim(); ++i)
    if (!pure_power_exponent(I, i)) return false;
  return true;
}

Int length_quotient(const MonomialIdeal& I) {
  if (!is_m_primary(I))
    throw std::invalid_argument("length_quotient: ideal is not m-primary");
  const std::size_t n = I.dim();
  std::vector<std::int64_t> box(n);
  std::int64_t cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int b = *pure_power_exponent(I, i);
    if (b > 1'000'000) throw BudgetError("length_quotient box too large", 0);
    box[i] = static_cast<std::int64_t>(b);
    if (cells > 200'000'000 / std::max<std::int64_t>(box[i], 1))
      throw BudgetError("length_quotient box too large", 0);
    cells *= box[i];
  }
  std::vector<std::vector<std::int64_t>> gens;
  for (const ExpVec& g : I.gens()) {
    std::vector<std::int64_t> v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = static_cast<std::int64_t>(g[i]);
    gens.push_back(std::move(v));
  }
  std::vector<std::int64_t> u(n, 0);
  Int count = 0;
  for (std::int64_t step = 0; step < cells; ++step) {
    bool inside = false;
    for (const auto& g : gens) {
      bool div = true;
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] > u[i]) {
          div = false;
          break;
        }
      if (div) {
        inside = true;
        break;
      }
    }
    if (!inside) ++count;
    for (std::size_t i = 0; i < n; ++i) {
      if (++u[i] < box[i]) break;
      u[i] = 0;
    }
  }
  return count;
}

MonomialIdeal restrict_coordinate(const MonomialIdeal& I, std::size_t k) {
  if (k >= I.dim()) throw std::invalid_argument("coordinate index out of range");
  std::vector<ExpVec> gens;
  for (const ExpVec& g : I.gens()) {
    if (g[k] != 0) continue;
    ExpVec v;
    v.reserve(g.size() - 1);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (i != k) v.push_back(g[i]);
    gens.push_back(std::move(v));
  }
  return MonomialIdeal(I.dim() - 1, std::move(gens));
}

}  // namespace newton
