#include "newton/bounds.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "newton/polytope.hpp"
#include "newton/thresholds.hpp"

namespace newton {

std::vector<Int> sigma_vector(const MonomialIdeal& I, std::size_t l,
                              const SigmaOptions& opts) {
  if (l < 1) throw std::invalid_argument("index must be >= 1");
  if (!I.is_proper())
    throw std::invalid_argument("sigma vector requires a proper nonzero ideal");
  if (static_cast<int>(l) > codimension(I))
    throw std::invalid_argument("index exceeds the codimension");
  std::vector<Int> s;
  if (is_m_primary(I)) {
    // All sigma values agree with the mixed multiplicities; one grid.
    std::vector<Int> e = mixed_multiplicities(I, opts.grid);
    s.assign(e.begin() + 1, e.begin() + 1 + static_cast<std::ptrdiff_t>(l));
    return s;
  }
  for (std::size_t j = 1; j <= l; ++j) {
    auto v = sigma(I, j, opts);
    if (!v) throw std::logic_error("sigma infinite below the codimension");
    s.push_back(*v);
  }
  return s;
}

Rat multiplicity_lower_bound(const MonomialIdeal& I, std::size_t l,
                             const SigmaOptions& opts) {
  std::vector<Int> s = sigma_vector(I, l, opts);
  Rat acc = 0;
  Int prev = 1;
  for (const Int& sj : s) {
    acc += Rat(prev, sj);
    prev = sj;
  }
  return acc;
}

BoundReport check_bound(const MonomialIdeal& I, std::size_t l,
                        const SigmaOptions& opts) {
  BoundReport r;
  r.lower = multiplicity_lower_bound(I, l, opts);
  r.threshold = lct_monomial(I);
  r.slack = r.threshold - r.lower;
  r.equality = (r.slack == 0);
  return r;
}

MonomialIdeal permute_coordinates(const MonomialIdeal& I,
                                  const std::vector<std::size_t>& perm) {
  if (perm.size() != I.dim()) throw std::invalid_argument("bad permutation");
  std::vector<ExpVec> gens;
  gens.reserve(I.gens().size());
  for (const ExpVec& g : I.gens()) {
    ExpVec v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[perm[i]] = g[i];
    gens.push_back(std::move(v));
  }
  return MonomialIdeal(I.dim(), std::move(gens));
}

namespace {

// Ordered selections of l distinct indices out of n, in lex order.
void for_each_selection(std::size_t n, std::size_t l,
                        const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> sel;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> bool {
    if (sel.size() == l) return fn(sel);
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      sel.push_back(i);
      if (self(self)) return true;
      sel.pop_back();
      used[i] = false;
    }
    return false;
  };
  rec(rec);
}

}  // namespace

std::optional<ClassificationWitness> classify_equality(const MonomialIdeal& I,
                                                       std::size_t l,
                                                       const SigmaOptions& opts) {
  BoundReport rep = check_bound(I, l, opts);
  if (!rep.equality)
    throw std::invalid_argument("classify_equality requires an equality case");

  const std::size_t n = I.dim();
  MonomialIdeal target = integral_closure(I);

  std::vector<Int> s = sigma_vector(I, l, opts);
  std::vector<std::vector<Int>> candidates;
  {
    // Ratio tuple s_j / s_{j-1}: the forced degrees in the equality case.
    std::vector<Int> ratios;
    Int prev = 1;
    bool integral = true;
    for (const Int& sj : s) {
      if (sj % prev != 0) {
        integral = false;
        break;
      }
      ratios.push_back(sj / prev);
      prev = sj;
    }
    if (integral) {
      std::sort(ratios.begin(), ratios.end());
      if (ratios.front() >= 1) candidates.push_back(ratios);
    }
  }
  {
    Int dmax = std::max(I.max_degree(), target.max_degree());
    std::vector<Int> tup(l, Int(1));
    // All nondecreasing degree tuples with entries <= dmax, lex order.
    auto rec = [&](auto&& self, std::size_t pos, Int lo) -> void {
      if (pos == l) {
        if (std::find(candidates.begin(), candidates.end(), tup) ==
            candidates.end())
          candidates.push_back(tup);
        return;
      }
      for (Int d = lo; d <= dmax; ++d) {
        tup[pos] = d;
        self(self, pos + 1, d);
      }
    };
    if (dmax <= 24) rec(rec, 0, Int(1));
  }

  for (const std::vector<Int>& degrees : candidates) {
    // Closure of the model on the first l coordinates, then permuted
    // into each candidate slot assignment.
    std::vector<ExpVec> model_gens;
    for (std::size_t j = 0; j < l; ++j) {
      ExpVec g(n, 0);
      g[j] = degrees[j];
      model_gens.push_back(std::move(g));
    }
    MonomialIdeal base_closure = integral_closure(MonomialIdeal(n, model_gens));

    std::optional<ClassificationWitness> found;
    for_each_selection(n, l, [&](const std::vector<std::size_t>& sel) {
      std::vector<std::size_t> perm(n);
      std::vector<bool> taken(n, false);
      for (std::size_t j = 0; j < l; ++j) {
        perm[j] = sel[j];
        taken[sel[j]] = true;
      }
      std::size_t next = 0;
      for (std::size_t i = l; i < n; ++i) {
        while (taken[next]) ++next;
        perm[i] = next;
        taken[next] = true;
      }
      if (permute_coordinates(base_closure, perm) == target) {
        found = ClassificationWitness{sel, degrees};
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

TwoDegreeReport two_degree_check(const MonomialIdeal& I1, const Int& d2) {
  if (!I1.is_proper())
    throw std::invalid_argument("two_degree_check requires a proper nonzero ideal");
  Int d1 = I1.max_degree();
  if (I1.min_degree() != d1)
    throw std::invalid_argument("generators must share one degree");
  if (d2 <= d1) throw std::invalid_argument("second degree must exceed the first");

  MonomialIdeal I = sum(I1, maximal_power(I1.dim(), d2));
  TwoDegreeReport r;
  r.assembled = lct_monomial(I);
  r.predicted = Rat(Int(I1.dim()), d2) + lct_monomial(I1) * Rat(d2 - d1, d2);
  r.equal = (r.assembled == r.predicted);
  return r;
}

}  // namespace newton
