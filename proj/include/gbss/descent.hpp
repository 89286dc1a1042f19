#pragma once

// Fiber-level checker for the descent condition of a bundle across a
// node: gluing element, classical-group membership, the kappa/isotropy
// shortcut conditions, and the general Schur-functor vanishing criterion
// on small instances.

#include <optional>
#include <vector>

#include "gbss/la.hpp"
#include "gbss/schur.hpp"

namespace gbss::descent {

enum class GroupKind { SL, Sp, SO };

std::string group_kind_name(GroupKind k);
GroupKind group_kind_from_name(const std::string& s);

struct GroupTag {
  GroupKind kind;
  QMat form;  // bilinear form on the space the gluing element acts on; empty for SL

  static GroupTag sl();
  static GroupTag sp(QMat omega);  // validates invertible antisymmetric
  static GroupTag so(QMat s);      // validates invertible symmetric
};

/// Standard symplectic form on Q^{2k}: block [[0, I], [-I, 0]].
QMat standard_symplectic_form(int n);

struct GluingDatum {
  int r = 0;
  QMat sigma1, sigma2;  // trivializations fiber -> V*, invertible
  QMat q1, q2;          // node quotients

  /// Validates shapes, invertible sigmas, rank r of [q1 | q2].
  static GluingDatum make(QMat sigma1, QMat sigma2, QMat q1, QMat q2);
};

/// g = -sigma2 q2^{-1} q1 sigma1^{-1}; nullopt when q2 is singular (the
/// torsion-free, non-locally-free case).
std::optional<QMat> gluing_element(const GluingDatum& d);

/// Exact membership: SL: det g = 1; Sp: g^T W g = W; SO: g^T S g = S and
/// det g = 1.
bool in_group(const GroupTag& tag, const QMat& g);

/// Classical-group shortcut for the descent condition. SL: kappa_1 =
/// (-1)^r kappa_2 with kappa_i = det q_i / det sigma_i. Sp: ker(q1, q2)
/// is isotropic for psi_1 - psi_2 with psi_i the form transported through
/// sigma_i. SO: both.
bool kappa_condition(const GroupTag& tag, const GluingDatum& d);

/// Basis of the Lie algebra of the tag's group in gl(n), acting on the
/// same space as the gluing element.
std::vector<QMat> lie_algebra_basis(const GroupTag& tag, int n);

/// Columns form a basis of the G-invariant vectors inside the Schur
/// subspace of the d-th tensor power of the dual space, computed by the
/// Lie-algebra annihilation system.
QMat invariant_subspace(const GroupTag& tag, const schur::Partition& lambda, int n);

/// The Schur-functor vanishing criterion for one partition: the map
/// S^lambda(ker q) -> (S^lambda(V)^G)* induced by S(sigma1 pr1) -
/// S(sigma2 pr2) is zero.
bool descent_condition(const schur::Partition& lambda, const GluingDatum& d, const GroupTag& tag);

/// Partitions carrying algebra generators of the invariant ring of
/// End(V): SL(n): (1^n); Sp: (1), (2), (1,1); SO(n): those plus (1^n).
std::vector<schur::Partition> generating_partitions(const GroupTag& tag, int n);

struct EquivalenceResult {
  bool schur_verdict = false;
  bool group_verdict = false;
  bool agree = false;
};

/// Runs the Schur criterion over the generating partitions and compares
/// with group membership of the gluing element (requires invertible q's).
EquivalenceResult descent_equivalence_test(const GroupTag& tag, const GluingDatum& d);

}  // namespace gbss::descent
