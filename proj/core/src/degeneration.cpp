#include "newton/degeneration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace newton {

Rat DegenerationInput::weighted_size(const ExpVec& u) const {
  Rat s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += Rat(u[i], degrees[i]);
  return s;
}

std::vector<std::string> validate_input(const DegenerationInput& in) {
  std::vector<std::string> out;
  const std::size_t r = in.degrees.size();
  if (r < 3) out.push_back("need at least three degrees");
  if (in.groups.size() != r) out.push_back("groups/degrees length mismatch");
  for (std::size_t i = 0; i < r; ++i) {
    if (in.degrees[i] < 1) out.push_back("degrees must be positive");
    if (i + 1 < r && in.degrees[i] >= in.degrees[i + 1])
      out.push_back("degrees must be strictly increasing");
  }
  if (!out.empty()) return out;
  if (!in.groups.front().empty() || !in.groups.back().empty())
    out.push_back("vectors may only be attached to the middle degrees");

  bool some_small = false;
  for (std::size_t i = 1; i + 1 < r; ++i) {
    for (const ExpVec& u : in.groups[i]) {
      if (u.size() != r) {
        out.push_back("vector length must equal the number of degrees");
        continue;
      }
      bool nonneg = true;
      for (const Int& c : u)
        if (c < 0) nonneg = false;
      if (!nonneg) {
        out.push_back("vectors must be nonnegative");
        continue;
      }
      if (total_degree(u) != in.degrees[i])
        out.push_back("(1) a vector in group " + std::to_string(i + 1) +
                      " does not have total degree d_" + std::to_string(i + 1));
      Rat w = in.weighted_size(u);
      if (u[0] < 1 && w < 1)
        out.push_back("(2) a vector has first coordinate 0 and weighted size < 1");
      ExpVec apex(r, 0);
      apex[i] = in.degrees[i];
      if (u == apex)
        out.push_back("(3) group " + std::to_string(i + 1) +
                      " contains its own apex");
      if (w < 1) some_small = true;
    }
  }
  if (!some_small)
    out.push_back("(4) no vector has weighted size < 1");
  return out;
}

namespace {

Rat eval_layer(const std::vector<Rat>& coeffs, const ExpVec& u) {
  Rat s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += coeffs[i] * Rat(u[i]);
  return s;
}

Int eval_int(const std::vector<Int>& coeffs, const ExpVec& u) {
  Int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += coeffs[i] * u[i];
  return s;
}

ExpVec apex_vector(const DegenerationInput& in, std::size_t gi) {
  ExpVec a(in.degrees.size(), 0);
  a[gi] = in.degrees[gi];
  return a;
}

}  // namespace

DegenerationOrder degeneration_order(const DegenerationInput& in) {
  {
    std::vector<std::string> bad = validate_input(in);
    if (!bad.empty()) {
      std::string msg = "invalid degeneration input:";
      for (const std::string& b : bad) msg += " " + b + ";";
      throw std::invalid_argument(msg);
    }
  }
  const std::size_t r = in.degrees.size();

  // Survivor sets per group, refined layer by layer.
  std::vector<std::vector<ExpVec>> survivors(r);
  for (std::size_t i = 1; i + 1 < r; ++i) survivors[i] = in.groups[i];

  std::vector<WeightLayer> layers;

  // Layer 0: reward small weighted size per unit of first coordinate.
  {
    bool have = false;
    Rat t0;
    for (std::size_t i = 1; i + 1 < r; ++i)
      for (const ExpVec& u : survivors[i]) {
        if (u[0] < 1) continue;
        Rat cand = (in.weighted_size(u) - 1) / Rat(u[0]);
        if (!have || cand < t0) t0 = cand;
        have = true;
      }
    if (!have) throw std::logic_error("no vector with positive first coordinate");
    std::vector<Rat> c(r);
    c[0] = t0 - Rat(1, in.degrees[0]);
    for (std::size_t i = 1; i < r; ++i) c[i] = -Rat(1, in.degrees[i]);
    layers.push_back({t0, c});
  }

  // Layer 1: separate apexes by powers of the top degree.
  {
    const Int& dr = in.degrees[r - 1];
    std::vector<Int> pw(r);  // pw[i] = dr^{i+1}
    pw[0] = dr;
    for (std::size_t i = 1; i < r; ++i) pw[i] = pw[i - 1] * dr;

    const std::vector<Rat>& c0 = layers[0].coeffs;
    bool have = false;
    Rat t1;
    for (std::size_t i = 1; i + 1 < r; ++i) {
      Rat apex0 = eval_layer(c0, apex_vector(in, i));
      std::vector<ExpVec> kept;
      for (const ExpVec& u : survivors[i])
        if (eval_layer(c0, u) == apex0) kept.push_back(u);
      survivors[i] = std::move(kept);
      for (const ExpVec& u : survivors[i]) {
        if (u[0] == 0) continue;
        Rat num = -Rat(in.degrees[i] * pw[i]);
        for (std::size_t j = 1; j < r; ++j) num += Rat(pw[j] * u[j]);
        Rat cand = num / Rat(u[0]);
        if (!have || cand < t1) t1 = cand;
        have = true;
      }
    }
    if (!have) throw std::logic_error("first layer kept no usable vector");
    std::vector<Rat> c(r);
    c[0] = t1;
    for (std::size_t j = 1; j < r; ++j) c[j] = -Rat(pw[j]);
    layers.push_back({t1, c});
  }

  // Refine with the latest layer, then peel off least groups until one
  // group is left.
  auto refine = [&](const std::vector<Rat>& c) {
    for (std::size_t i = 1; i + 1 < r; ++i) {
      Rat apex = eval_layer(c, apex_vector(in, i));
      std::vector<ExpVec> kept;
      for (const ExpVec& u : survivors[i])
        if (eval_layer(c, u) == apex) kept.push_back(u);
      survivors[i] = std::move(kept);
    }
  };
  refine(layers[1].coeffs);

  auto live_groups = [&]() {
    std::vector<std::size_t> live;
    for (std::size_t i = 1; i + 1 < r; ++i)
      if (!survivors[i].empty()) live.push_back(i);
    return live;
  };

  std::vector<std::size_t> live = live_groups();
  while (live.size() >= 2) {
    std::size_t low = live.front();
    bool have = false;
    Rat t;
    for (std::size_t gi : live) {
      if (gi == low) continue;
      for (const ExpVec& u : survivors[gi]) {
        if (u[0] < 1)
          throw std::logic_error("survivor with zero first coordinate");
        Rat cand = Rat(u[low], u[0]);
        if (!have || cand > t) t = cand;
        have = true;
      }
    }
    if (!have) throw std::logic_error("refinement cannot separate groups");
    std::vector<Rat> c(r, Rat(0));
    c[0] = -t;
    c[low] = 1;
    layers.push_back({t, c});
    refine(c);
    std::vector<std::size_t> next = live_groups();
    if (next.size() >= live.size())
      throw std::logic_error("refinement did not shrink the live groups");
    live = std::move(next);
  }
  if (live.empty()) throw std::logic_error("all groups eliminated");
  const std::size_t m = live.front();

  // Clear denominators per layer, then combine lexicographically with a
  // base exceeding the value spread of the lower layers.
  std::vector<ExpVec> eval_set;
  for (std::size_t i = 1; i + 1 < r; ++i)
    for (const ExpVec& u : in.groups[i]) eval_set.push_back(u);
  for (std::size_t i = 0; i < r; ++i) eval_set.push_back(apex_vector(in, i));

  std::vector<std::vector<Int>> scaled;
  for (const WeightLayer& layer : layers) {
    Int l = denominator_lcm(layer.coeffs);
    std::vector<Int> c(r);
    for (std::size_t i = 0; i < r; ++i)
      c[i] = Int(numerator(layer.coeffs[i] * Rat(l)));
    scaled.push_back(std::move(c));
  }
  std::vector<Int> combined = scaled.back();
  for (std::size_t k = scaled.size() - 1; k-- > 0;) {
    Int lo = eval_int(combined, eval_set.front());
    Int hi = lo;
    for (const ExpVec& u : eval_set) {
      Int v = eval_int(combined, u);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    Int base = hi - lo + 1;
    std::vector<Int> next(r);
    for (std::size_t i = 0; i < r; ++i)
      next[i] = scaled[k][i] * base + combined[i];
    combined = std::move(next);
  }

  DegenerationOrder order{combined, m, layers};

  // Re-verify the postconditions on the full input set.
  Int m_apex = eval_int(order.weights, apex_vector(in, m));
  bool attained = false;
  for (std::size_t i = 1; i + 1 < r; ++i) {
    for (const ExpVec& u : in.groups[i]) {
      Int v = eval_int(order.weights, u);
      if (i != m) {
        if (v >= m_apex)
          throw std::logic_error(
              "selection check failed: group " + std::to_string(i + 1) +
              " reaches the chosen apex level");
      } else {
        if (v > m_apex)
          throw std::logic_error("selection check failed: apex level exceeded");
        if (v == m_apex) {
          attained = true;
          if (u[0] < 1 || in.weighted_size(u) >= 1)
            throw std::logic_error(
              "selection check failed: a maximizer violates the mixed-term shape");
        }
      }
    }
  }
  if (!attained)
    throw std::logic_error("selection check failed: apex level not attained");
  return order;
}

namespace {

std::vector<std::size_t> block_of_variable(
    const std::vector<DegenerationBlock>& blocks) {
  std::vector<std::size_t> owner;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    owner.insert(owner.end(), blocks[b].num_vars, b);
  return owner;
}

ExpVec collapse_to_blocks(const SparsePoly::Exps& e,
                          const std::vector<std::size_t>& owner,
                          std::size_t r) {
  ExpVec u(r, 0);
  for (std::size_t i = 0; i < e.size(); ++i) u[owner[i]] += e[i];
  return u;
}

}  // namespace

DegeneratedIdeal degenerate_ideal(const std::vector<DegenerationBlock>& blocks) {
  const std::size_t r = blocks.size();
  if (r == 0) throw std::invalid_argument("no blocks");
  std::size_t n = 0;
  for (const DegenerationBlock& b : blocks) {
    if (b.num_vars == 0) throw std::invalid_argument("empty block");
    if (b.gens.size() != b.num_vars)
      throw std::invalid_argument(
          "complete-intersection shape: one form per block variable");
    n += b.num_vars;
  }

  DegenerationInput in;
  for (const DegenerationBlock& b : blocks) in.degrees.push_back(b.degree);
  in.groups.assign(r, {});

  std::vector<std::size_t> owner = block_of_variable(blocks);

  for (std::size_t bi = 0; bi < r; ++bi) {
    for (const SparsePoly& f : blocks[bi].gens) {
      if (f.is_zero()) throw std::invalid_argument("zero generator");
      if (f.dim() != n) throw std::invalid_argument("generator dimension mismatch");
      for (const auto& [e, c] : f.terms()) {
        std::int64_t deg = 0;
        for (std::int64_t x : e) deg += x;
        if (Int(deg) != blocks[bi].degree)
          throw std::invalid_argument("generators must be forms of the block degree");
        ExpVec u = collapse_to_blocks(e, owner, r);
        if (bi == 0 && u[0] != blocks[0].degree)
          throw std::invalid_argument(
              "alignment: first block must be extended from its own variables");
        Rat w = in.weighted_size(u);
        if (w < 1 && u[0] < 1)
          throw std::invalid_argument(
              "alignment: a term lies outside the degree region and misses the first block");
        // Mixed terms of the middle blocks drive the weight order.
        if (bi >= 1 && bi + 1 < r && u[bi] != blocks[bi].degree) {
          bool earlier = false;
          for (std::size_t j = 0; j < bi; ++j) earlier |= (u[j] > 0);
          if (!earlier)
            throw std::invalid_argument(
                "alignment: a mixed term involves only later blocks");
          if (std::find(in.groups[bi].begin(), in.groups[bi].end(), u) ==
              in.groups[bi].end())
            in.groups[bi].push_back(u);
        }
      }
    }
  }

  DegenerationOrder order = degeneration_order(in);

  std::vector<Int> var_weights(n);
  for (std::size_t i = 0; i < n; ++i) var_weights[i] = order.weights[owner[i]];

  DegeneratedIdeal out;
  out.m_index = order.m_index;
  out.order = order;
  for (std::size_t bi = 0; bi < r; ++bi) {
    DegenerationBlock nb;
    nb.degree = blocks[bi].degree;
    nb.num_vars = blocks[bi].num_vars;
    for (const SparsePoly& f : blocks[bi].gens)
      nb.gens.push_back(initial_form(f, var_weights));
    out.blocks.push_back(std::move(nb));
  }

  // Conclusions on the selected block: mixed terms of the initial forms
  // touch the first block and sit below the degree region; some initial
  // form kept a mixed term.
  bool some_mixed = false;
  const std::size_t m = order.m_index;
  for (const SparsePoly& h : out.blocks[m].gens) {
    for (const auto& [e, c] : h.terms()) {
      ExpVec u = collapse_to_blocks(e, owner, r);
      if (u[m] == blocks[m].degree) continue;  // pure part
      some_mixed = true;
      if (u[0] < 1 || in.weighted_size(u) >= 1)
        throw std::logic_error(
            "degeneration check failed: a kept mixed term has the wrong shape");
    }
  }
  if (!some_mixed)
    throw std::logic_error(
        "degeneration check failed: no mixed term kept in the selected block");
  return out;
}

}  // namespace newton
