#include "gbss/curve.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gbss::curve {

int LinearPoly::eventual_sign() const {
  if (slope != 0) return rat_sign(slope);
  return rat_sign(constant);
}

CurveNumerics CurveNumerics::make(int components, std::vector<std::pair<int, int>> nodes,
                                  std::vector<Int> polarization, Int genus) {
  if (components < 1) throw std::invalid_argument("curve needs at least one component");
  if (static_cast<int>(polarization.size()) != components)
    throw std::invalid_argument("polarization length must match component count");
  for (Int d : polarization)
    if (d < 1) throw std::invalid_argument("polarization degrees must be positive");
  if (genus < 2) throw std::invalid_argument("genus must be >= 2");
  for (auto [a, b] : nodes)
    if (a < 0 || a >= components || b < 0 || b >= components)
      throw std::invalid_argument("node branch index out of range");
  // Union-find connectivity of the component graph.
  std::vector<int> parent(components);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : nodes) parent[find(a)] = find(b);
  for (int i = 1; i < components; ++i)
    if (find(i) != find(0)) throw std::invalid_argument("component graph is not connected");
  return CurveNumerics{components, std::move(nodes), std::move(polarization), genus};
}

bool SheafNumerics::uniform_rank() const {
  for (Int r : component_ranks)
    if (r != component_ranks.front()) return false;
  return !component_ranks.empty();
}

FlagInput FlagInput::make(int components, Int r, std::vector<ComponentFlag> comps) {
  if (static_cast<int>(comps.size()) != components)
    throw std::invalid_argument("flag input needs one flag per component");
  bool nontrivial = false;
  for (const auto& c : comps) {
    if (c.weights.empty() || c.weights.size() != c.dims.size())
      throw std::invalid_argument("component flag: weights and dims must be nonempty, equal length");
    for (size_t k = 0; k + 1 < c.weights.size(); ++k)
      if (c.weights[k] >= c.weights[k + 1]) throw std::invalid_argument("flag weights must strictly increase");
    for (size_t k = 0; k + 1 < c.dims.size(); ++k)
      if (c.dims[k] >= c.dims[k + 1]) throw std::invalid_argument("flag dims must strictly increase");
    if (c.dims.front() <= 0 || c.dims.back() != r)
      throw std::invalid_argument("flag dims must be positive and end at r");
    Int trace = 0;
    for (size_t k = 0; k < c.weights.size(); ++k) {
      Int prev = k == 0 ? 0 : c.dims[k - 1];
      trace += c.weights[k] * (c.dims[k] - prev);
    }
    if (trace != 0) throw std::invalid_argument("component flag must have weighted trace zero");
    if (c.weights.size() > 1) nontrivial = true;
  }
  if (!nontrivial) throw std::invalid_argument("flag input is trivial (all components have a single step)");
  return FlagInput{std::move(comps)};
}

LinearPoly hilbert_poly(const CurveNumerics& curve, const SheafNumerics& sheaf) {
  if (sheaf.component_ranks.size() != curve.polarization.size())
    throw std::invalid_argument("hilbert_poly: rank list length mismatch");
  Rat slope(0);
  for (size_t i = 0; i < curve.polarization.size(); ++i)
    slope += Rat(static_cast<long>(curve.polarization[i])) * Rat(static_cast<long>(sheaf.component_ranks[i]));
  return LinearPoly{slope, Rat(static_cast<long>(sheaf.chi))};
}

Rat rank_formula(const CurveNumerics& curve, const std::vector<Int>& component_ranks) {
  if (component_ranks.size() != curve.polarization.size())
    throw std::invalid_argument("rank_formula: rank list length mismatch");
  Rat num(0);
  for (size_t i = 0; i < component_ranks.size(); ++i)
    num += Rat(static_cast<long>(curve.polarization[i])) * Rat(static_cast<long>(component_ranks[i]));
  return num / Rat(static_cast<long>(curve.deg_polarization()));
}

Rat degree(const CurveNumerics& curve, const SheafNumerics& sheaf) {
  Rat rk = rank_formula(curve, sheaf.component_ranks);
  return Rat(static_cast<long>(sheaf.chi)) - rk * Rat(static_cast<long>(1 - curve.genus));
}

WeightedFiltration build_filtration(const CurveNumerics& curve, Int r, const FlagInput& flags) {
  if (static_cast<int>(flags.comps.size()) != curve.components)
    throw std::invalid_argument("build_filtration: flag/component count mismatch");
  // Merge the distinct weight values.
  std::vector<Int> mu;
  for (const auto& c : flags.comps)
    for (Int w : c.weights) mu.push_back(w);
  std::sort(mu.begin(), mu.end());
  mu.erase(std::unique(mu.begin(), mu.end()), mu.end());

  WeightedFiltration f;
  f.r = r;
  f.mu = mu;
  int q1 = static_cast<int>(mu.size());
  for (int j = 0; j < q1; ++j) {
    std::vector<Int> dims_j(curve.components, 0);
    for (int i = 0; i < curve.components; ++i) {
      const auto& c = flags.comps[i];
      // W_j(i) = W^i_k for the largest k with weight <= mu_j; dimension 0
      // when no such k exists.
      Int dim = 0;
      for (size_t k = 0; k < c.weights.size(); ++k)
        if (c.weights[k] <= mu[j]) dim = c.dims[k];
      dims_j[i] = dim;
    }
    f.dims.push_back(dims_j);
    f.ranks.push_back(rank_formula(curve, dims_j));
  }
  for (int j = 0; j + 1 < q1; ++j)
    f.m.push_back((Rat(static_cast<long>(mu[j + 1])) - Rat(static_cast<long>(mu[j]))) / Rat(static_cast<long>(r)));
  return f;
}

Rat weighted_rank_sum(const WeightedFiltration& f) {
  Rat s(0);
  for (int j = 0; j < f.q(); ++j) s += f.m[j] * f.ranks[j];
  return s;
}

Rat ss_quantity(const WeightedFiltration& f, const std::vector<Int>& chi_list, Int chi_total, Int r) {
  if (static_cast<int>(chi_list.size()) != f.q())
    throw std::invalid_argument("ss_quantity: need one chi per proper filtration step");
  Rat s(0);
  for (int j = 0; j < f.q(); ++j) {
    Rat term = Rat(static_cast<long>(chi_total)) * f.ranks[j] -
               Rat(static_cast<long>(chi_list[j])) * Rat(static_cast<long>(r));
    s += f.m[j] * term;
  }
  return s;
}

AltForms ss_alt_forms(const WeightedFiltration& f, const std::vector<Int>& chi_list, Int chi_total, Int r) {
  if (f.mu.back() <= 0) throw std::invalid_argument("ss_alt_forms: requires mu_{q+1} > 0");
  if (static_cast<int>(chi_list.size()) != f.q())
    throw std::invalid_argument("ss_alt_forms: chi list length mismatch");
  Rat mu_top(static_cast<long>(f.mu.back()));

  Rat weighted_chi(0);
  for (int j = 0; j < f.q(); ++j) weighted_chi += f.m[j] * Rat(static_cast<long>(chi_list[j]));
  Rat form1 = Rat(static_cast<long>(chi_total)) / Rat(static_cast<long>(r)) - weighted_chi / mu_top;

  Rat form2(0);
  for (int j = 0; j <= f.q(); ++j) {
    Int chi_j = j < f.q() ? chi_list[j] : chi_total;
    Int chi_prev = j == 0 ? 0 : chi_list[j - 1];
    form2 += Rat(static_cast<long>(f.mu[j])) * Rat(static_cast<long>(chi_j - chi_prev));
  }

  Rat main = ss_quantity(f, chi_list, chi_total, r);
  bool agree = rat_sign(form1) == rat_sign(main) && rat_sign(form2) == rat_sign(main);
  return AltForms{form1, form2, agree};
}

ExponentPair git_exponent(Int k1, Int m, Int n, const LinearPoly& P, Int chi) {
  if (chi >= 0) throw std::invalid_argument("git_exponent: chi must be negative");
  Rat pmn = P.eval(Rat(static_cast<long>(m + n)));
  Rat pn = P.eval(Rat(static_cast<long>(n)));
  Rat chi_r(static_cast<long>(chi));
  Rat ratio_pn = pn / chi_r;
  if (ratio_pn.get_den() != 1)
    throw std::invalid_argument("git_exponent: chi does not divide P(n)");
  ExponentPair out;
  out.from_multiplicity = -(Rat(static_cast<long>(k1)) * pmn) / chi_r;
  out.from_hilbert_value = -(pmn * pn) / chi_r;
  if (out.from_hilbert_value.get_den() != 1)
    throw std::logic_error("git_exponent: exponent unexpectedly non-integral");
  return out;
}

}  // namespace gbss::curve
