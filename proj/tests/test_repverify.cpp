#include <doctest.h>

#include "gbss/repverify.hpp"
#include "gbss/rng.hpp"
#include "gbss/samples.hpp"

using namespace gbss;
using namespace gbss::repverify;

TEST_CASE("so(5) model") {
  LieAlgebraModel g = build_so5();
  CHECK(g.basis.size() == 10);  // n(2n+1) for n = 2
  CHECK(g.std_dim() == 5);
  CHECK(g.cartan.size() == 2);
  // f_theta acts with weight -(1,1): checked in the builder, spot check here
  QMat h1 = g.basis[g.cartan[0]];
  QMat f = g.lowest_root_vector();
  CHECK(h1 * f - f * h1 == f.scaled(Rat(-1)));
}

TEST_CASE("irrep catalog for so(5)") {
  LieAlgebraModel g = build_so5();
  IrrepModel std_rep = build_irrep(g, IrrepId::Std);
  CHECK(std_rep.dim == 5);
  CHECK(std_rep.highest_weight.coords == std::vector<Int>{1, 0});

  IrrepModel sym = build_irrep(g, IrrepId::TracelessSym2Std);
  CHECK(sym.dim == 14);
  CHECK(sym.highest_weight.coords == std::vector<Int>{2, 0});

  IrrepModel ext = build_irrep(g, IrrepId::Exterior2Std);
  CHECK(ext.dim == 10);
  CHECK(ext.highest_weight.coords == std::vector<Int>{1, 1});

  IrrepModel triv = build_irrep(g, IrrepId::Trivial);
  CHECK(triv.dim == 1);
}

TEST_CASE("irrep catalog for sl(2)") {
  LieAlgebraModel g = build_sl2();
  CHECK(build_irrep(g, IrrepId::Std).dim == 2);
  CHECK(build_irrep(g, IrrepId::TracelessSym2Std).dim == 3);
  CHECK(build_irrep(g, IrrepId::Exterior2Std).dim == 1);
}

TEST_CASE("two-point operator nilpotency") {
  LieAlgebraModel g = build_so5();
  IrrepModel sym = build_irrep(g, IrrepId::TracelessSym2Std);
  CHECK(two_point_operator(g, sym, 3).t_power.is_zero());
  CHECK_FALSE(two_point_operator(g, sym, 2).t_power.is_zero());
  CHECK_FALSE(two_point_operator(g, sym, 1).t.is_zero());

  LieAlgebraModel sl2 = build_sl2();
  IrrepModel std_rep = build_irrep(sl2, IrrepId::Std);
  CHECK(two_point_operator(sl2, std_rep, 2).t_power.is_zero());
  CHECK_FALSE(two_point_operator(sl2, std_rep, 1).t.is_zero());
}

TEST_CASE("coinvariants of sl(2) std with a brute-force cross-check") {
  LieAlgebraModel g = build_sl2();
  IrrepModel v = build_irrep(g, IrrepId::Std);
  CHECK(coinvariants_dim(g, v, 2) == 1);

  // independent route: assemble the full span matrix and take its rank
  int n = v.dim;
  std::vector<std::vector<Rat>> columns;
  for (const QMat& x : v.action) {
    QMat a = x.kron(QMat::identity(n)) + QMat::identity(n).kron(x.transpose().scaled(Rat(-1)));
    for (int j = 0; j < n * n; ++j) columns.push_back(a.col(j));
  }
  QMat dual = v.action[g.lowest_index].transpose().scaled(Rat(-1));
  QMat t2 = QMat::identity(n).kron(dual * dual);
  for (int j = 0; j < n * n; ++j) columns.push_back(t2.col(j));
  QMat all(n * n, static_cast<int>(columns.size()));
  for (size_t j = 0; j < columns.size(); ++j)
    for (int i = 0; i < n * n; ++i) all(i, static_cast<int>(j)) = columns[j][i];
  CHECK(n * n - all.rank() == 1);
}

TEST_CASE("coinvariants of the trivial module") {
  LieAlgebraModel g = build_sl2();
  IrrepModel triv = build_irrep(g, IrrepId::Trivial);
  CHECK(coinvariants_dim(g, triv, 2) == 1);
  Witness w = zero_weight_witness(g, triv, 2);
  CHECK(w.vector == std::vector<Rat>{Rat(1)});
}

TEST_CASE("coinvariant dimension is basis independent") {
  LieAlgebraModel g = build_sl2();
  IrrepModel v = build_irrep(g, IrrepId::TracelessSym2Std);
  CHECK(coinvariants_dim(g, v, 3) == 1);

  Rng rng(33);
  QMat p = samples::random_invertible(rng, v.dim, 2);
  QMat pinv = p.inverse();
  IrrepModel conjugated = v;
  for (auto& x : conjugated.action) x = p * x * pinv;
  CHECK(coinvariants_dim(g, conjugated, 3) == 1);
}

TEST_CASE("the so(5) two-point instance") {
  LieAlgebraModel g = build_so5();
  IrrepModel sym = build_irrep(g, IrrepId::TracelessSym2Std);
  CHECK(coinvariants_dim(g, sym, 3) == 1);

  Witness w = zero_weight_witness(g, sym, 3);
  CHECK(w.weight == std::vector<Int>{0, 0});

  // every basis tensor of nonzero weight dies in the quotient
  CoinvariantAnalysis analysis = coinvariant_analysis(g, sym, 3);
  int checked = 0;
  for (int i = 0; i < sym.dim; ++i)
    for (int j = 0; j < sym.dim; ++j) {
      if (sym.weights[i] == sym.weights[j]) continue;
      std::vector<Rat> v(static_cast<size_t>(sym.dim) * sym.dim, Rat(0));
      v[static_cast<size_t>(i) * sym.dim + j] = 1;
      CHECK(analysis.span.contains(v));
      ++checked;
    }
  CHECK(checked == 196 - 16);  // sum of squared weight multiplicities is 16
}

TEST_CASE("sl(2) witness") {
  LieAlgebraModel g = build_sl2();
  IrrepModel v = build_irrep(g, IrrepId::Std);
  Witness w = zero_weight_witness(g, v, 2);
  CHECK(w.weight == std::vector<Int>{0});
  // the witness is a weight-zero basis tensor e_i (x) e_i*
  int nonzero = 0;
  for (const Rat& x : w.vector)
    if (x != 0) ++nonzero;
  CHECK(nonzero == 1);
}
