#pragma once

// Weight vectors and the mu-function for tensor-field semistability,
// plus the delta-semistability inequality. The nonvanishing pattern of
// the tensor field on filtration steps enters as an explicit oracle (the
// set of admissible index tuples).

#include <set>
#include <vector>

#include "gbss/curve.hpp"
#include "gbss/rational.hpp"

namespace gbss::tensor {

struct TensorShape {
  Int a = 1;       // deg L
  int b = 1;       // tensor arity
  int c = 1;       // number of summands
  Rat delta;       // positive
  Rat r;           // rank of F; a*r must be integral

  static TensorShape make(Int a, int b, int c, Rat delta, Rat r);
};

struct FiltrationWithOracle {
  std::vector<Rat> ranks;                 // r_1 < ... < r_{p+1} = r, a*r_i integral
  std::vector<Rat> weights;               // l_1..l_p, positive
  std::vector<curve::LinearPoly> hilbert; // P_{F_i} for i = 1..p
  std::set<std::vector<int>> admissible;  // b-tuples over {1..p+1}, 1-based

  int p() const { return static_cast<int>(weights.size()); }

  /// Validates shapes, strict rank increase, positivity, integrality of
  /// a*r_i, upward closure of the admissible set and admissibility of
  /// the all-(p+1) tuple.
  static FiltrationWithOracle make(const TensorShape& shape, std::vector<Rat> ranks, std::vector<Rat> weights,
                                   std::vector<curve::LinearPoly> hilbert,
                                   std::set<std::vector<int>> admissible);
};

/// xi_j for rank step j: a*j entries of value a*j - a*r followed by
/// a*r - a*j entries of value a*j. Entries sum to zero.
std::vector<Int> xi_vector(const Rat& j, Int a, const Rat& r);

/// lambda(l_) = sum_i l_i xi_{r_i}; weakly increasing, zero sum.
std::vector<Rat> lambda_vector(const FiltrationWithOracle& f, const TensorShape& shape);

/// -min over admissible tuples (i_1..i_b) of sum_k lambda_{a r_{i_k}}.
Rat mu(const FiltrationWithOracle& f, const TensorShape& shape);

struct DeltaSS {
  curve::LinearPoly lhs;  // sum_i l_i (r_i P - r P_i) + delta * mu
  bool holds;             // eventual nonnegativity (lexicographic)
};

DeltaSS delta_ss(const FiltrationWithOracle& f, const TensorShape& shape, const curve::LinearPoly& p_total);

}  // namespace gbss::tensor
