#include "gbss/repverify.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbss::repverify {

namespace {

QMat elem(int n, int i, int j, int ip, int jp) {
  // E_ij - E_ip,jp
  QMat m(n, n);
  m(i, j) = 1;
  m(ip, jp) = m(ip, jp) - 1;
  return m;
}

QMat bracket(const QMat& a, const QMat& b) { return a * b - b * a; }

std::vector<Rat> flatten(const QMat& m) {
  std::vector<Rat> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

void check_closure(const LieAlgebraModel& g) {
  for (size_t i = 0; i < g.basis.size(); ++i)
    for (size_t j = i + 1; j < g.basis.size(); ++j)
      expand_in_basis(g, bracket(g.basis[i], g.basis[j]));  // throws if outside the span
}

void check_lowest_weight(const LieAlgebraModel& g) {
  std::vector<Int> theta = g.rs.theta();
  const QMat& f = g.lowest_root_vector();
  for (size_t c = 0; c < g.cartan.size(); ++c) {
    QMat ad = bracket(g.basis[g.cartan[c]], f);
    Int expected = g.rs.family == lie::Family::A ? theta[c] - theta[c + 1] : theta[c];
    if (!(ad == f.scaled(Rat(static_cast<long>(-expected)))))
      throw std::logic_error("f_theta is not a weight vector of weight -theta");
  }
}

}  // namespace

LieAlgebraModel build_so5() {
  // Anti-diagonal symmetric form J(i, 4-i) = 1; membership condition
  // X(4-b, a) = -X(4-a, b). Cartan: diag(a, b, 0, -b, -a).
  LieAlgebraModel g;
  g.rs = lie::RootSystem::make(lie::Family::B, 2);
  const int n = 5;
  QMat h1(n, n), h2(n, n);
  h1(0, 0) = 1;
  h1(4, 4) = -1;
  h2(1, 1) = 1;
  h2(3, 3) = -1;
  g.basis.push_back(h1);                    // 0
  g.basis.push_back(h2);                    // 1
  g.basis.push_back(elem(n, 0, 1, 3, 4));   // 2: e_{e1-e2}
  g.basis.push_back(elem(n, 1, 2, 2, 3));   // 3: e_{e2}
  g.basis.push_back(elem(n, 0, 2, 2, 4));   // 4: e_{e1}
  g.basis.push_back(elem(n, 0, 3, 1, 4));   // 5: e_{e1+e2}
  g.basis.push_back(elem(n, 1, 0, 4, 3));   // 6: f_{e1-e2}
  g.basis.push_back(elem(n, 2, 1, 3, 2));   // 7: f_{e2}
  g.basis.push_back(elem(n, 2, 0, 4, 2));   // 8: f_{e1}
  g.basis.push_back(elem(n, 3, 0, 4, 1));   // 9: f_{e1+e2}
  g.cartan = {0, 1};
  g.positive_indices = {2, 3, 4, 5};
  g.lowest_index = 9;
  check_closure(g);
  check_lowest_weight(g);
  return g;
}

LieAlgebraModel build_sl2() {
  LieAlgebraModel g;
  g.rs = lie::RootSystem::make(lie::Family::A, 1);
  QMat h(2, 2), e(2, 2), f(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  e(0, 1) = 1;
  f(1, 0) = 1;
  g.basis = {h, e, f};
  g.cartan = {0};
  g.positive_indices = {1};
  g.lowest_index = 2;
  check_closure(g);
  check_lowest_weight(g);
  return g;
}

std::vector<Rat> expand_in_basis(const LieAlgebraModel& g, const QMat& m) {
  int n = g.std_dim();
  QMat system(n * n, static_cast<int>(g.basis.size()));
  for (size_t b = 0; b < g.basis.size(); ++b) {
    std::vector<Rat> col = flatten(g.basis[b]);
    for (int i = 0; i < n * n; ++i) system(i, static_cast<int>(b)) = col[i];
  }
  QMat rhs(n * n, 1);
  std::vector<Rat> target = flatten(m);
  for (int i = 0; i < n * n; ++i) rhs(i, 0) = target[i];
  auto sol = system.solve(rhs);
  if (!sol) throw std::logic_error("matrix is not in the Lie algebra span");
  std::vector<Rat> out;
  for (size_t b = 0; b < g.basis.size(); ++b) out.push_back((*sol)(static_cast<int>(b), 0));
  return out;
}

std::string irrep_id_name(IrrepId id) {
  switch (id) {
    case IrrepId::Std: return "std";
    case IrrepId::TracelessSym2Std: return "traceless-sym2-std";
    case IrrepId::Exterior2Std: return "exterior2-std";
    case IrrepId::Trivial: return "trivial";
  }
  return "?";
}

namespace {

// Pairs (a, b), a <= b, indexing the Sym^2 basis e_a . e_b.
std::vector<std::pair<int, int>> sym2_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> ext2_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

int pair_index(const std::vector<std::pair<int, int>>& pairs, int a, int b) {
  auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(std::min(a, b), std::max(a, b)));
  return static_cast<int>(it - pairs.begin());
}

// Action of x on Sym^2 of the standard representation.
QMat sym2_action(const QMat& x, const std::vector<std::pair<int, int>>& pairs) {
  int n = x.rows(), m = static_cast<int>(pairs.size());
  QMat out(m, m);
  for (int col = 0; col < m; ++col) {
    auto [a, b] = pairs[col];
    for (int i = 0; i < n; ++i) {
      if (x(i, a) != 0) out(pair_index(pairs, i, b), col) += x(i, a);
      if (x(i, b) != 0) out(pair_index(pairs, a, i), col) += x(i, b);
    }
  }
  return out;
}

QMat ext2_action(const QMat& x, const std::vector<std::pair<int, int>>& pairs) {
  int n = x.rows(), m = static_cast<int>(pairs.size());
  QMat out(m, m);
  auto add = [&](int row_a, int row_b, int col, const Rat& c) {
    if (row_a == row_b) return;
    int sign = row_a < row_b ? 1 : -1;
    out(pair_index(pairs, row_a, row_b), col) += c * sign;
  };
  for (int col = 0; col < m; ++col) {
    auto [a, b] = pairs[col];
    for (int i = 0; i < n; ++i) {
      if (x(i, a) != 0) add(i, b, col, x(i, a));
      if (x(i, b) != 0) add(a, i, col, x(i, b));
    }
  }
  return out;
}

struct Built {
  int dim;
  std::vector<QMat> action;
  std::vector<Int> expected_hw;  // e-coordinates
};

Built build_raw(const LieAlgebraModel& g, IrrepId id) {
  int n = g.std_dim();
  int rank = g.rs.rank;
  switch (id) {
    case IrrepId::Std: {
      std::vector<Int> hw(g.rs.coord_len(), 0);
      hw[0] = 1;
      return Built{n, g.basis, hw};
    }
    case IrrepId::Trivial: {
      std::vector<QMat> act(g.basis.size(), QMat(1, 1));
      return Built{1, act, std::vector<Int>(g.rs.coord_len(), 0)};
    }
    case IrrepId::Exterior2Std: {
      auto pairs = ext2_pairs(n);
      std::vector<QMat> act;
      for (const auto& x : g.basis) act.push_back(ext2_action(x, pairs));
      std::vector<Int> hw(g.rs.coord_len(), 0);
      if (g.rs.family == lie::Family::B && rank == 2) {
        hw[0] = 1;
        hw[1] = 1;
      }
      // sl(2): Lambda^2 of the standard representation is trivial
      return Built{static_cast<int>(pairs.size()), act, hw};
    }
    case IrrepId::TracelessSym2Std: {
      auto pairs = sym2_pairs(n);
      std::vector<QMat> big;
      for (const auto& x : g.basis) big.push_back(sym2_action(x, pairs));
      std::vector<Int> hw(g.rs.coord_len(), 0);
      hw[0] = 2;
      if (g.rs.family == lie::Family::A) return Built{static_cast<int>(pairs.size()), big, hw};

      // Type B: split off the invariant form. The contraction
      // e_a . e_b -> J(a, b) has a G-stable kernel; for the
      // anti-diagonal J the kernel has the plain basis vectors with
      // J(a,b) = 0 plus differences of the three paired ones.
      int m = static_cast<int>(pairs.size());
      auto j_of = [n](int a, int b) { return a + b == n - 1 ? 1 : 0; };
      QMat basis_mat(m, m - 1);
      int out = 0;
      int prev_paired = -1;
      for (int col = 0; col < m; ++col) {
        auto [a, b] = pairs[col];
        if (j_of(a, b) == 0) {
          basis_mat(col, out++) = 1;
        } else if (prev_paired < 0) {
          prev_paired = col;
        } else {
          basis_mat(prev_paired, out) = 1;
          basis_mat(col, out) = -1;
          ++out;
          prev_paired = col;
        }
      }
      if (out != m - 1) throw std::logic_error("traceless basis construction is off");
      std::vector<QMat> act;
      for (const auto& bx : big) {
        auto sol = basis_mat.solve(bx * basis_mat);
        if (!sol) throw std::logic_error("contraction kernel is not stable under the action");
        act.push_back(*sol);
      }
      return Built{m - 1, act, hw};
    }
  }
  throw std::invalid_argument("unknown irrep id");
}

std::vector<Int> eigen_tuple(const LieAlgebraModel& g, const std::vector<QMat>& action, int vec) {
  std::vector<Int> w;
  for (int c : g.cartan) {
    const QMat& h = action[c];
    Rat diag = h(vec, vec);
    if (diag.get_den() != 1) throw std::logic_error("non-integral weight");
    w.push_back(diag.get_num().get_si());
  }
  return w;
}

std::vector<Int> expected_eigen(const LieAlgebraModel& g, const std::vector<Int>& ecoords) {
  if (g.rs.family == lie::Family::A) {
    std::vector<Int> out;
    for (int c = 0; c < g.rs.rank; ++c) out.push_back(ecoords[c] - ecoords[c + 1]);
    return out;
  }
  return ecoords;
}

}  // namespace

IrrepModel build_irrep(const LieAlgebraModel& g, IrrepId id) {
  Built built = build_raw(g, id);
  IrrepModel irrep;
  irrep.id = id;
  irrep.dim = built.dim;
  irrep.action = std::move(built.action);
  irrep.highest_weight = lie::make_weight(g.rs, built.expected_hw);

  // Bracket compatibility on all basis pairs.
  for (size_t i = 0; i < g.basis.size(); ++i)
    for (size_t j = i + 1; j < g.basis.size(); ++j) {
      std::vector<Rat> coeffs = expand_in_basis(g, bracket(g.basis[i], g.basis[j]));
      QMat expected(irrep.dim, irrep.dim);
      for (size_t b = 0; b < coeffs.size(); ++b)
        if (coeffs[b] != 0) expected = expected + irrep.action[b].scaled(coeffs[b]);
      if (!(bracket(irrep.action[i], irrep.action[j]) == expected))
        throw std::logic_error("representation does not respect the bracket");
    }

  // Cartan matrices must be diagonal in this basis; record the weights.
  for (int c : g.cartan) {
    const QMat& h = irrep.action[c];
    for (int i = 0; i < irrep.dim; ++i)
      for (int j = 0; j < irrep.dim; ++j)
        if (i != j && h(i, j) != 0) throw std::logic_error("Cartan action is not diagonal");
  }
  for (int v = 0; v < irrep.dim; ++v) irrep.weights.push_back(eigen_tuple(g, irrep.action, v));

  // Unique highest-weight line of the stated weight.
  QMat stacked(static_cast<int>(g.positive_indices.size()) * irrep.dim, irrep.dim);
  for (size_t p = 0; p < g.positive_indices.size(); ++p) {
    const QMat& e = irrep.action[g.positive_indices[p]];
    for (int i = 0; i < irrep.dim; ++i)
      for (int j = 0; j < irrep.dim; ++j) stacked(static_cast<int>(p) * irrep.dim + i, j) = e(i, j);
  }
  QMat hw_space = stacked.nullspace();
  if (hw_space.cols() != 1) throw std::logic_error("highest-weight line is not unique");
  int lead = -1;
  for (int i = 0; i < irrep.dim && lead < 0; ++i)
    if (hw_space(i, 0) != 0) lead = i;
  if (irrep.weights[lead] != expected_eigen(g, irrep.highest_weight.coords))
    throw std::logic_error("highest weight differs from the stated one");

  Rat dim_formula = lie::weyl_dim(g.rs, irrep.highest_weight);
  if (dim_formula != Rat(irrep.dim)) throw std::logic_error("dimension disagrees with the Weyl formula");
  return irrep;
}

TwoPointOperator two_point_operator(const LieAlgebraModel& g, const IrrepModel& irrep, int k) {
  if (k < 1) throw std::invalid_argument("two_point_operator: power must be >= 1");
  QMat dual = irrep.action[g.lowest_index].transpose().scaled(Rat(-1));
  QMat id = QMat::identity(irrep.dim);
  QMat dual_k = dual;
  for (int i = 1; i < k; ++i) dual_k = dual_k * dual;
  return TwoPointOperator{id.kron(dual), id.kron(dual_k)};
}

CoinvariantAnalysis coinvariant_analysis(const LieAlgebraModel& g, const IrrepModel& irrep, int exponent) {
  if (exponent < 1) throw std::invalid_argument("coinvariant exponent must be >= 1");
  int n = irrep.dim;
  CoinvariantAnalysis out{n * n, RowSpace<Rat>(n * n)};

  // x . (e_i (x) e_j*) = (x e_i) (x) e_j* - e_i (x) (x^T e_j*)
  for (const QMat& x : irrep.action) {
    QMat xt = x.transpose();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Rat> v(static_cast<size_t>(n) * n, Rat(0));
        for (int a = 0; a < n; ++a) {
          if (x(a, i) != 0) v[static_cast<size_t>(a) * n + j] += x(a, i);
          if (xt(a, j) != 0) v[static_cast<size_t>(i) * n + a] -= xt(a, j);
        }
        out.span.insert(std::move(v));
      }
  }

  QMat dual = irrep.action[g.lowest_index].transpose().scaled(Rat(-1));
  QMat dual_k = dual;
  for (int i = 1; i < exponent; ++i) dual_k = dual_k * dual;
  if (!dual_k.is_zero()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Rat> v(static_cast<size_t>(n) * n, Rat(0));
        for (int a = 0; a < n; ++a)
          if (dual_k(a, j) != 0) v[static_cast<size_t>(i) * n + a] += dual_k(a, j);
        out.span.insert(std::move(v));
      }
  }
  return out;
}

Int coinvariants_dim(const LieAlgebraModel& g, const IrrepModel& irrep, int exponent) {
  return coinvariant_analysis(g, irrep, exponent).quotient_dim();
}

Witness zero_weight_witness(const LieAlgebraModel& g, const IrrepModel& irrep, int exponent) {
  CoinvariantAnalysis analysis = coinvariant_analysis(g, irrep, exponent);
  int n = irrep.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (irrep.weights[i] != irrep.weights[j]) continue;
      std::vector<Rat> v(static_cast<size_t>(n) * n, Rat(0));
      v[static_cast<size_t>(i) * n + j] = 1;
      if (!analysis.span.contains(v)) {
        std::vector<Rat> vec(v);
        return Witness{std::move(vec), std::vector<Int>(g.cartan.size(), 0)};
      }
    }
  throw std::runtime_error("no zero-weight witness outside the span (inconsistent instance)");
}

}  // namespace gbss::repverify
