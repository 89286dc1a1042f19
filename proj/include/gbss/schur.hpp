#pragma once

// Schur functors on small vector spaces, realized as images of the
// (unnormalized) Young symmetrizer c = a * b inside the d-th tensor
// power. Caps keep tensor powers small; defaults are |lambda| <= 4 and
// dim <= 6.

#include <vector>

#include "gbss/la.hpp"
#include "gbss/rational.hpp"

namespace gbss::schur {

inline constexpr int kPartitionSizeCap = 4;
inline constexpr int kDimCap = 6;

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  static Partition make(std::vector<int> parts, int size_cap = kPartitionSizeCap);
  int size() const;
  std::string str() const;
  bool operator==(const Partition& o) const { return parts == o.parts; }
};

/// dim S^lambda(Q^m) by the hook content formula.
Rat hook_content_dim(const Partition& lambda, int m);

/// The canonical-tableau Young symmetrizer acting on (Q^m)^{tensor d},
/// applied to the standard basis vector with row-major multi-index
/// `index`. Returns a dense coordinate vector of length m^d.
std::vector<Rat> symmetrizer_column(const Partition& lambda, int m, long index);

/// Basis of the image of the symmetrizer inside (Q^m)^{tensor d}
/// (columns). Deterministic: first independent symmetrizer columns in
/// lexicographic multi-index order.
QMat schur_space_basis(const Partition& lambda, int m, int dim_cap = kDimCap);

/// Matrix of S^lambda(f) with respect to schur_space_basis of source and
/// target; f is a dim-target x dim-source matrix.
QMat schur_apply(const Partition& lambda, const QMat& f, int dim_cap = kDimCap);

/// f^{tensor d} applied to a vector in the source tensor power.
std::vector<Rat> tensor_power_apply(const QMat& f, int d, const std::vector<Rat>& v);

}  // namespace gbss::schur
