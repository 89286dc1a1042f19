#pragma once

// Vanishing-order bound for one-parameter degenerations: per-node bound
// l * ord(kappa) + (w0 lambda)(phi), exhaustive nonnegativity sweeps for
// the A/C representation choices, violation search for B/D, and the
// valuation identity ord det q1 = sum of nonnegative exponents.

#include <optional>
#include <vector>

#include "gbss/la.hpp"
#include "gbss/lie.hpp"
#include "gbss/poly.hpp"

namespace gbss::pole {

struct PoleInstance {
  lie::RepId rep;
  Int l = 1;
  std::vector<std::pair<lie::DominantWeight, lie::DominantCoweight>> nodes;

  /// Validates l >= 1 and level(lambda_x) <= l * dynkin_index per node.
  static PoleInstance make(lie::RepId rep, Int l,
                           std::vector<std::pair<lie::DominantWeight, lie::DominantCoweight>> nodes);
};

/// Sum of the nonnegative diagonal entries of phi embedded in V.
Int ord_kappa(const lie::RepId& rep, const lie::DominantCoweight& phi);

/// l * ord_kappa(rep, phi) - <dual_weight(lambda), phi>. Throws if
/// level(lambda) > l * dynkin_index(rep).
Int node_pole_bound(const lie::RepId& rep, Int l, const lie::DominantWeight& lambda,
                    const lie::DominantCoweight& phi);

Int total_pole_bound(const PoleInstance& instance);

struct SweepWitness {
  Int l = 0;
  lie::DominantWeight lambda;
  lie::DominantCoweight phi;
  Int bound = 0;
};

struct SweepReport {
  bool vacuous = false;  // empty search range
  Int min_value = 0;
  SweepWitness min_witness;
  std::optional<SweepWitness> negative_witness;
  long long evaluated = 0;
};

/// Exhaustively evaluates node_pole_bound for 1 <= l <= l_max, every
/// dominant weight of level <= l * d_V and every dominant coweight with
/// entries bounded by coweight_bound. When ord_kappa_filter is set, only
/// coweights with ord_kappa equal to the filter value are swept (the
/// "det q1 vanishes to the given order" slice). Deterministic result for
/// any thread count.
SweepReport verify_nonnegativity(const lie::RepId& rep, Int l_max, Int coweight_bound, int threads = 1,
                                 std::optional<Int> ord_kappa_filter = std::nullopt);

// ---------------------------------------------------------------------
// Valuation identity for the boundary divisor: matrices over Q[t].

struct ValuationMatrixPair {
  Matrix<QPoly> q1, q2;

  /// Validates: square, equal sizes, both determinants nonzero as
  /// polynomials.
  static ValuationMatrixPair make(Matrix<QPoly> q1, Matrix<QPoly> q2);

  int r() const { return q1.rows(); }
};

/// Exponents a_1 <= ... <= a_r of a diagonalization of q2^{-1} q1 over
/// the local ring at t = 0 (elementary divisors; negative exponents
/// allowed).
std::vector<Int> smith_valuations(const ValuationMatrixPair& p);

struct AlphaKReport {
  Int ord_det_q1 = 0;
  Int sum_nonneg_a = 0;
  bool equal = false;
};

/// Checks ord det q1 = sum of the nonnegative a_i. Throws
/// std::domain_error("alpha_k hypothesis violated...") when the stacked
/// map [q1 | q2] is not surjective over the local ring, i.e. when
/// [q1(0) | q2(0)] has rank < r.
AlphaKReport check_alpha_k(const ValuationMatrixPair& p);

}  // namespace gbss::pole
