#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "newton/charp.hpp"
#include "newton/monomial_ideal.hpp"
#include "newton/rational.hpp"

namespace newton {

/// Input of the weight-order construction: strictly increasing positive
/// degrees d_1 < ... < d_r and, for each middle index 2 <= i <= r-1, a
/// finite set of nonnegative integer vectors attached to degree d_i.
/// groups is indexed 0-based parallel to degrees; groups[0] and
/// groups[r-1] must stay empty.
struct DegenerationInput {
  std::vector<Int> degrees;
  std::vector<std::vector<ExpVec>> groups;

  /// The degree-weighted size of u: sum of u_i / d_i.
  Rat weighted_size(const ExpVec& u) const;
};

/// Checks the four admissibility conditions exactly:
///  (1) every vector in groups[i] has total degree degrees[i];
///  (2) every vector has first coordinate >= 1 or weighted size >= 1;
///  (3) no group contains its own apex d_i b_i;
///  (4) some vector has weighted size < 1.
/// Violations come back as data, one message each; empty means valid.
std::vector<std::string> validate_input(const DegenerationInput& in);

/// One refinement layer: the parameter (the extremal ratio defining the
/// layer) and the rational linear map it induces.
struct WeightLayer {
  Rat parameter;
  std::vector<Rat> coeffs;
};

struct DegenerationOrder {
  std::vector<Int> weights;         // the combined integer linear map
  std::size_t m_index = 0;          // 0-based index of the selected group
  std::vector<WeightLayer> layers;  // the rational layers, most significant first
};

/// Builds the integer weight map: a first layer rewards small weighted
/// size per unit of first coordinate, a second separates apexes by
/// degree-weighted powers, and further layers eliminate the least
/// surviving group until exactly one remains. The rational layers are
/// cleared of denominators and combined lexicographically with a base
/// exceeding each layer's value spread over the vectors involved. The
/// returned map and index are re-verified against the selection
/// properties before returning: vectors of other groups sit strictly
/// below the selected apex level, the selected group attains it
/// exactly, and every maximizer has first coordinate >= 1 and weighted
/// size < 1. A verification failure names the offending condition.
DegenerationOrder degeneration_order(const DegenerationInput& in);

/// A block of a graded complete intersection: a_i = vars.size()
/// consecutive variables carrying forms of one degree. Generators are
/// polynomials in the full variable set (dimension = sum of all block
/// sizes, variables ordered block by block).
struct DegenerationBlock {
  Int degree;
  std::size_t num_vars = 0;
  std::vector<SparsePoly> gens;
};

struct DegeneratedIdeal {
  std::vector<DegenerationBlock> blocks;  // initial forms, same shape
  std::size_t m_index = 0;                // block whose forms kept mixed terms
  DegenerationOrder order;                // the weight map on block exponents
};

/// Degenerates an aligned complete intersection: collapses the support
/// of each generator's mixed part to block-exponent vectors, runs
/// degeneration_order on the resulting sets, and returns the initial
/// forms under the pulled-back weight. Inputs must satisfy the
/// alignment condition: the first block's forms involve only its own
/// variables, and every generator term either has degree-weighted value
/// >= 1 or touches the first block. The output is re-verified: in the
/// selected block each initial form splits as a pure-block part plus
/// mixed terms that touch the first block and have weighted value < 1,
/// and at least one mixed part is nonzero.
DegeneratedIdeal degenerate_ideal(const std::vector<DegenerationBlock>& blocks);

}  // namespace newton
