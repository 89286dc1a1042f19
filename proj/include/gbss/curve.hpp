#pragma once

// Numerical model of nodal curves with a polarization, torsion-free
// sheaf numerics, and the weighted-filtration semistability engine.
// Everything is exact; Euler characteristics of the filtration steps are
// caller-supplied integers (they are extra sheaf data, not determined by
// the flags).

#include <optional>
#include <vector>

#include "gbss/rational.hpp"

namespace gbss::curve {

/// P(n) = slope * n + constant (Hilbert polynomials of sheaves on curves).
struct LinearPoly {
  Rat slope;
  Rat constant;

  Rat eval(const Rat& n) const { return slope * n + constant; }
  LinearPoly operator+(const LinearPoly& o) const { return {slope + o.slope, constant + o.constant}; }
  LinearPoly operator-(const LinearPoly& o) const { return {slope - o.slope, constant - o.constant}; }
  LinearPoly scaled(const Rat& c) const { return {slope * c, constant * c}; }
  bool operator==(const LinearPoly& o) const { return slope == o.slope && constant == o.constant; }
  /// Sign for n >> 0: lexicographic on (slope, constant).
  int eventual_sign() const;
};

struct CurveNumerics {
  int components = 1;
  std::vector<std::pair<int, int>> nodes;  // branch components of each node
  std::vector<Int> polarization;           // d_i = deg L restricted to X_i
  Int genus = 2;

  /// Validates: components >= 1, all d_i >= 1, genus >= 2, connected
  /// component graph, node indices in range.
  static CurveNumerics make(int components, std::vector<std::pair<int, int>> nodes,
                            std::vector<Int> polarization, Int genus);

  Int deg_polarization() const { return sum(polarization); }
};

struct SheafNumerics {
  std::vector<Int> component_ranks;
  Int chi = 0;

  bool uniform_rank() const;
};

struct ComponentFlag {
  std::vector<Int> weights;  // strictly increasing
  std::vector<Int> dims;     // strictly increasing, last = r
};

struct FlagInput {
  std::vector<ComponentFlag> comps;

  /// Validates shape, strict monotonicity, per-component weighted trace
  /// zero (the SL(V) condition) and nontriviality (some component has a
  /// proper step).
  static FlagInput make(int components, Int r, std::vector<ComponentFlag> comps);
};

/// Merged weighted filtration: distinct weights mu_1 < ... < mu_{q+1},
/// per-component dimensions, rational ranks and weights
/// m_j = (mu_{j+1} - mu_j)/r.
struct WeightedFiltration {
  Int r = 0;
  std::vector<Int> mu;
  std::vector<std::vector<Int>> dims;  // dims[j][i], j = 0..q, component i
  std::vector<Rat> ranks;              // rk E_{j+1}, j = 0..q
  std::vector<Rat> m;                  // m_1..m_q

  int q() const { return static_cast<int>(mu.size()) - 1; }
};

LinearPoly hilbert_poly(const CurveNumerics& curve, const SheafNumerics& sheaf);

/// (sum_i d_i * rank_i) / deg L.
Rat rank_formula(const CurveNumerics& curve, const std::vector<Int>& component_ranks);

/// chi(E) - rk(E) * chi(O_X) with chi(O_X) = 1 - g; rational when the
/// rank is not uniform.
Rat degree(const CurveNumerics& curve, const SheafNumerics& sheaf);

WeightedFiltration build_filtration(const CurveNumerics& curve, Int r, const FlagInput& flags);

/// sum_j m_j rk(E_j); equals mu_{q+1} for every valid input.
Rat weighted_rank_sum(const WeightedFiltration& f);

/// sum_j m_j (chi(E) rk(E_j) - chi(E_j) rk(E)); semistable iff >= 0.
Rat ss_quantity(const WeightedFiltration& f, const std::vector<Int>& chi_list, Int chi_total, Int r);

struct AltForms {
  Rat form1;   // chi/r - (sum m_j chi_j)/mu_{q+1}
  Rat form2;   // sum_{j=1}^{q+1} mu_j (chi_j - chi_{j-1})
  bool agree;  // all three formulations have the same sign
};

AltForms ss_alt_forms(const WeightedFiltration& f, const std::vector<Int>& chi_list, Int chi_total, Int r);

struct ExponentPair {
  Rat from_multiplicity;   // -k1 P(m+n) / chi
  Rat from_hilbert_value;  // -P(m+n) P(n) / chi, integral under the divisibility hypothesis
};

/// Both exponent normalizations tied to the ample line on the parameter
/// space. Requires chi < 0 and chi | P(n).
ExponentPair git_exponent(Int k1, Int m, Int n, const LinearPoly& P, Int chi);

}  // namespace gbss::curve
