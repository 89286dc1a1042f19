#pragma once

// Root-system and weight calculus for the classical families A, B, C, D
// in standard Euclidean coordinates.
//
// Coordinate conventions (all weights/coweights are integer vectors):
//   A_n  : vectors of length n+1 (the group is SL(n+1)); dominant weights
//          are weakly decreasing with last entry 0, dominant coweights
//          weakly decreasing with zero sum.
//   B_n  : length n, lambda_1 >= ... >= lambda_n >= 0; rank >= 2.
//   C_n  : length n, lambda_1 >= ... >= lambda_n >= 0.
//   D_n  : length n, lambda_1 >= ... >= lambda_{n-1} >= |lambda_n|; rank >= 3.
// Spin (half-integral) weights are outside the scope of this library.

#include <string>
#include <vector>

#include "gbss/rational.hpp"

namespace gbss::lie {

enum class Family { A, B, C, D };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct RootSystem {
  Family family;
  int rank;

  /// Validates the rank restrictions (B: >= 2, D: >= 3, else >= 1).
  static RootSystem make(Family f, int rank);

  /// Length of weight/coweight vectors: rank+1 for A, rank otherwise.
  int coord_len() const { return family == Family::A ? rank + 1 : rank; }

  std::vector<Int> theta() const;           // highest root
  std::vector<Int> theta_covector() const;  // coroot of theta, as a pairing vector
  std::vector<std::vector<Rat>> positive_roots() const;
};

struct DominantWeight {
  std::vector<Int> coords;
  bool operator==(const DominantWeight& o) const { return coords == o.coords; }
  bool operator<(const DominantWeight& o) const { return coords < o.coords; }
};

struct DominantCoweight {
  std::vector<Int> coords;
  bool operator==(const DominantCoweight& o) const { return coords == o.coords; }
  bool operator<(const DominantCoweight& o) const { return coords < o.coords; }
};

/// Validating constructors; throw std::invalid_argument on bad input.
DominantWeight make_weight(const RootSystem& rs, std::vector<Int> coords);
DominantCoweight make_coweight(const RootSystem& rs, std::vector<Int> coords);

/// <lambda, theta_covector>. Equals lambda_1 for A (last entry 0) and C,
/// lambda_1 + lambda_2 for B and D.
Int level(const RootSystem& rs, const DominantWeight& lambda);

/// Highest weight -w0(lambda) of the dual representation, as a dominant
/// weight. Identity for B, C and for D of even rank; D of odd rank flips
/// the sign of the last coordinate; A negates, reverses and renormalizes.
DominantWeight dual_weight(const RootSystem& rs, const DominantWeight& lambda);

/// Coordinate pairing sum_i lambda_i * phi_i.
Int pair(const DominantWeight& lambda, const DominantCoweight& phi);

/// Weyl dimension formula, exact.
Rat weyl_dim(const RootSystem& rs, const DominantWeight& lambda);

/// All dominant weights of level <= max_level, lexicographic order.
std::vector<DominantWeight> enumerate_weights(const RootSystem& rs, Int max_level);

/// All dominant coweights with entries bounded by entry_bound in absolute
/// value, lexicographic order.
std::vector<DominantCoweight> enumerate_coweights(const RootSystem& rs, Int entry_bound);

// ---------------------------------------------------------------------
// Fixed faithful representations V used for the degeneration analysis:
// W + W* for SL(W), the standard representation for Sp/SO.

enum class RepTag { AStdPlusDual, BStd, CStd, DStd };

std::string rep_tag_name(RepTag t);
RepTag rep_tag_from_name(const std::string& s);

struct RepId {
  RepTag tag;
  int rank;

  static RepId make(RepTag tag, int rank);
  RootSystem root_system() const;
  /// dim V: 2n for the A/C/D tags, 2n+1 for B (n = coordinate length).
  int dim() const;
};

/// Diagonal matrix entries of phi acting on V: (phi, -phi) for the
/// A/C/D tags and (phi, -phi, 0) for B. Entries always sum to zero.
std::vector<Int> embed_coweight(const RepId& rep, const DominantCoweight& phi);

/// Weights of V in e-coordinates (with multiplicity).
std::vector<std::vector<Int>> rep_weights(const RepId& rep);

/// Dynkin index computed as (1/2) * sum over weights mu of V of
/// <mu, theta_covector>^2. Integral for all four tags.
Int dynkin_index(const RepId& rep);

}  // namespace gbss::lie
