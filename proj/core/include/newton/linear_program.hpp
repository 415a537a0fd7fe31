#pragma once

#include <vector>

#include "newton/rational.hpp"

namespace newton {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;
  std::vector<Rat> solution;
};

/// Minimizes c.x subject to A x = b, x >= 0, by the two-phase dense
/// primal simplex over exact rationals. Bland's rule is used throughout,
/// so the method terminates on every input with no cycling and the
/// returned optimum is an exact rational. Tableaux here are tiny
/// ((#generators + n) squared), so no effort is spent on sparsity.
LpResult solve_lp(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                  std::vector<Rat> c);

/// Phase-one feasibility of {A x = b, x >= 0}.
bool lp_feasible(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

}  // namespace newton
