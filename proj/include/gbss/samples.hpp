#pragma once

// Seeded random instance generators used by the verification batches
// (CLI and test suites). Every generator is deterministic in the Rng
// state; constructions follow the normal forms that make the expected
// answers known.

#include <vector>

#include "gbss/curve.hpp"
#include "gbss/descent.hpp"
#include "gbss/pole.hpp"
#include "gbss/rng.hpp"
#include "gbss/tensor.hpp"

namespace gbss::samples {

/// Unimodular element of GL_r(Q[t]): product of elementary transvection
/// matrices I + p(t) E_ij with small polynomial p.
Matrix<QPoly> random_unimodular_poly(Rng& rng, int r, int ops = 4, int max_deg = 2);

struct AlphaKInstance {
  pole::ValuationMatrixPair pair;
  std::vector<Int> expected;  // sorted exponents a_i
};

/// U diag(t^{m_i}) V and U diag(t^{m_i - a_i}) V with m_i = max(a_i, 0):
/// the surjective normal form with known exponents.
AlphaKInstance random_alpha_k_instance(Rng& rng, int r_min = 2, int r_max = 4, Int a_bound = 3);

struct FlagSample {
  int components = 1;
  Int r = 2;
  curve::FlagInput flags;
  std::vector<Int> chi_list;
  Int chi_total = 0;
};

/// Random flag data on 2 or 3 components with per-component weighted
/// trace zero (weights are scaled by r and recentred, which preserves
/// strict monotonicity).
FlagSample random_flag_sample(Rng& rng);

/// Positive degrees d_i <= 5.
std::vector<Int> random_polarization(Rng& rng, int components);

/// Product of random integer transvections; determinant 1.
QMat random_sl(Rng& rng, int n, int ops = 5);

/// Product of random symplectic transvections I - c v v^T Omega.
QMat random_sp(Rng& rng, const QMat& omega, int ops = 5);

/// Member of the tag's group (SL or Sp supported).
QMat random_group_element(Rng& rng, const descent::GroupTag& tag, int n);

/// Perturbs a group element until membership fails.
QMat random_nonmember(Rng& rng, const descent::GroupTag& tag, int n);

/// Gluing datum with random invertible trivializations and q2, arranged
/// so the gluing element equals g.
descent::GluingDatum datum_realizing(Rng& rng, const QMat& g);

struct TensorSample {
  tensor::TensorShape shape;
  tensor::FiltrationWithOracle filtration;
  curve::LinearPoly p_total;
};

TensorSample random_tensor_sample(Rng& rng);

/// Random invertible integer matrix with entries in [-bound, bound].
QMat random_invertible(Rng& rng, int n, Int bound = 3);

}  // namespace gbss::samples
