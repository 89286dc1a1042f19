#pragma once

// Exact matrix models of so(5) and sl(2), a small catalog of their
// irreducible representations, and the two-point coinvariant
// computation: nilpotency of the lowest-root operator on V (x) V* and
// the dimension of the quotient by the diagonal action plus a power of
// that operator.

#include <optional>
#include <vector>

#include "gbss/la.hpp"
#include "gbss/lie.hpp"

namespace gbss::repverify {

struct LieAlgebraModel {
  lie::RootSystem rs;
  std::vector<QMat> basis;             // matrices of the standard representation
  std::vector<int> cartan;             // indices of the diagonal Cartan elements
  std::vector<int> positive_indices;   // indices of the positive root vectors
  int lowest_index = -1;               // index of f_theta

  int std_dim() const { return basis.front().rows(); }
  const QMat& lowest_root_vector() const { return basis[lowest_index]; }
};

/// so(5) preserving the anti-diagonal symmetric form, so the Cartan is
/// diagonal and weights are readable from matrix entries. Validates
/// bracket closure and that f_theta has weight -theta.
LieAlgebraModel build_so5();

/// sl(2) with the usual h, e, f.
LieAlgebraModel build_sl2();

/// Coefficients of m in the model basis; throws if m is outside the span.
std::vector<Rat> expand_in_basis(const LieAlgebraModel& g, const QMat& m);

enum class IrrepId { Std, TracelessSym2Std, Exterior2Std, Trivial };

std::string irrep_id_name(IrrepId id);

struct IrrepModel {
  IrrepId id;
  int dim = 0;
  std::vector<QMat> action;                 // one matrix per Lie algebra basis element
  lie::DominantWeight highest_weight;
  std::vector<std::vector<Int>> weights;    // Cartan eigenvalue tuple per basis vector
};

/// Builds the representation and verifies: bracket compatibility on all
/// basis pairs, a unique highest-weight line of the stated weight, and
/// the Weyl dimension formula.
IrrepModel build_irrep(const LieAlgebraModel& g, IrrepId id);

struct TwoPointOperator {
  QMat t;        // identity (x) dual action of f_theta on V (x) V*
  QMat t_power;  // its k-th power
};

TwoPointOperator two_point_operator(const LieAlgebraModel& g, const IrrepModel& irrep, int k);

/// The exponent l * d_V + 1 used for the quotient at a node with line
/// bundle power l and representation Dynkin index d_V.
inline int coinvariant_exponent(Int l, Int d_v) { return static_cast<int>(l * d_v) + 1; }

struct CoinvariantAnalysis {
  int total_dim = 0;
  RowSpace<Rat> span;  // g . (V (x) V*) + im T^exponent

  int quotient_dim() const { return total_dim - span.dim(); }
};

CoinvariantAnalysis coinvariant_analysis(const LieAlgebraModel& g, const IrrepModel& irrep, int exponent);

Int coinvariants_dim(const LieAlgebraModel& g, const IrrepModel& irrep, int exponent);

struct Witness {
  std::vector<Rat> vector;          // element of V (x) V*, nonzero in the quotient
  std::vector<Int> weight;          // its Cartan weight (all zeros)
};

/// A weight-zero basis tensor e_i (x) e_j* with nonzero image in the
/// quotient. Throws std::runtime_error if none exists.
Witness zero_weight_witness(const LieAlgebraModel& g, const IrrepModel& irrep, int exponent);

}  // namespace gbss::repverify
