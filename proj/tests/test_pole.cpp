#include <doctest.h>

#include "gbss/pole.hpp"
#include "gbss/samples.hpp"

using namespace gbss;
using namespace gbss::pole;
namespace lie = gbss::lie;

namespace {

Matrix<QPoly> diag_powers(std::initializer_list<int> exps) {
  int r = static_cast<int>(exps.size());
  Matrix<QPoly> m(r, r);
  int i = 0;
  for (int e : exps) {
    m(i, i) = QPoly::monomial(Rat(1), e);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("ord_kappa") {
  lie::RepId a1 = lie::RepId::make(lie::RepTag::AStdPlusDual, 1);
  CHECK(ord_kappa(a1, lie::make_coweight(a1.root_system(), {1, -1})) == 2);
  lie::RepId b2 = lie::RepId::make(lie::RepTag::BStd, 2);
  CHECK(ord_kappa(b2, lie::make_coweight(b2.root_system(), {1, 0})) == 1);
  CHECK(ord_kappa(b2, lie::make_coweight(b2.root_system(), {0, 0})) == 0);

  // zero iff phi = 0
  for (const auto& phi : lie::enumerate_coweights(b2.root_system(), 2)) {
    bool zero = phi.coords == std::vector<Int>{0, 0};
    CHECK((ord_kappa(b2, phi) == 0) == zero);
  }
}

TEST_CASE("ord_kappa closed forms per representation") {
  // W + W*: sum of |phi_i|; B/C standard: sum of phi_i
  lie::RepId a2 = lie::RepId::make(lie::RepTag::AStdPlusDual, 2);
  for (const auto& phi : lie::enumerate_coweights(a2.root_system(), 2)) {
    Int abs_sum = 0;
    for (Int x : phi.coords) abs_sum += std::abs(x);
    CHECK(ord_kappa(a2, phi) == abs_sum);
  }
  for (lie::RepId rep : {lie::RepId::make(lie::RepTag::CStd, 2), lie::RepId::make(lie::RepTag::BStd, 2)})
    for (const auto& phi : lie::enumerate_coweights(rep.root_system(), 3))
      CHECK(ord_kappa(rep, phi) == sum(phi.coords));
}

TEST_CASE("node pole bound frozen examples") {
  lie::RepId b2 = lie::RepId::make(lie::RepTag::BStd, 2);
  lie::RootSystem rsb = b2.root_system();
  CHECK(node_pole_bound(b2, 1, lie::make_weight(rsb, {2, 0}), lie::make_coweight(rsb, {1, 0})) == -1);

  lie::RepId a1 = lie::RepId::make(lie::RepTag::AStdPlusDual, 1);
  lie::RootSystem rsa = a1.root_system();
  CHECK(node_pole_bound(a1, 1, lie::make_weight(rsa, {2, 0}), lie::make_coweight(rsa, {1, -1})) == 0);
  CHECK(node_pole_bound(a1, 2, lie::make_weight(rsa, {0, 0}), lie::make_coweight(rsa, {0, 0})) == 0);

  // level cap enforced: level 3 > 1 * d_V = 2
  CHECK_THROWS(node_pole_bound(b2, 1, lie::make_weight(rsb, {2, 1}), lie::make_coweight(rsb, {1, 0})));
}

TEST_CASE("node pole bound scales linearly in (l, lambda)") {
  lie::RepId c2 = lie::RepId::make(lie::RepTag::CStd, 2);
  lie::RootSystem rs = c2.root_system();
  for (const auto& lambda : lie::enumerate_weights(rs, 1))
    for (const auto& phi : lie::enumerate_coweights(rs, 2)) {
      Int base = node_pole_bound(c2, 1, lambda, phi);
      for (Int k = 2; k <= 3; ++k) {
        std::vector<Int> scaled(lambda.coords);
        for (auto& x : scaled) x *= k;
        CHECK(node_pole_bound(c2, k, lie::make_weight(rs, scaled), phi) == k * base);
      }
    }
}

TEST_CASE("total pole bound over nodes") {
  lie::RepId b2 = lie::RepId::make(lie::RepTag::BStd, 2);
  lie::RootSystem rs = b2.root_system();
  auto lambda = lie::make_weight(rs, {2, 0});
  auto phi = lie::make_coweight(rs, {1, 0});
  PoleInstance two = PoleInstance::make(b2, 1, {{lambda, phi}, {lambda, phi}});
  CHECK(total_pole_bound(two) == -2);
  PoleInstance none = PoleInstance::make(b2, 1, {});
  CHECK(total_pole_bound(none) == 0);
  CHECK_THROWS(PoleInstance::make(b2, 1, {{lie::make_weight(rs, {2, 1}), phi}}));
}

TEST_CASE("nonnegativity sweeps") {
  SweepReport c2 = verify_nonnegativity(lie::RepId::make(lie::RepTag::CStd, 2), 2, 3);
  CHECK(c2.min_value == 0);
  CHECK_FALSE(c2.negative_witness.has_value());

  SweepReport b2 = verify_nonnegativity(lie::RepId::make(lie::RepTag::BStd, 2), 1, 1);
  CHECK(b2.min_value == -1);
  REQUIRE(b2.negative_witness.has_value());
  CHECK(b2.negative_witness->lambda.coords == std::vector<Int>{2, 0});
  CHECK(b2.negative_witness->phi.coords == std::vector<Int>{1, 0});

  SweepReport a1 = verify_nonnegativity(lie::RepId::make(lie::RepTag::AStdPlusDual, 1), 1, 0);
  CHECK(a1.min_value == 0);
  CHECK_FALSE(a1.negative_witness.has_value());
}

TEST_CASE("sweep is deterministic across thread counts") {
  lie::RepId b2 = lie::RepId::make(lie::RepTag::BStd, 2);
  SweepReport serial = verify_nonnegativity(b2, 2, 2, 1);
  SweepReport parallel = verify_nonnegativity(b2, 2, 2, 3);
  CHECK(serial.min_value == parallel.min_value);
  CHECK(serial.evaluated == parallel.evaluated);
  CHECK(serial.min_witness.lambda == parallel.min_witness.lambda);
  CHECK(serial.min_witness.phi == parallel.min_witness.phi);
  CHECK(serial.min_witness.l == parallel.min_witness.l);
}

TEST_CASE("sweep with an ord det q1 slice") {
  // restricting to coweights with ord_kappa = 1 keeps the counterexample
  lie::RepId b2 = lie::RepId::make(lie::RepTag::BStd, 2);
  SweepReport r = verify_nonnegativity(b2, 1, 1, 1, std::optional<Int>(1));
  REQUIRE(r.negative_witness.has_value());
  CHECK(ord_kappa(b2, r.negative_witness->phi) == 1);

  // an unreachable slice empties the coweight range
  SweepReport empty = verify_nonnegativity(b2, 1, 0, 1, std::optional<Int>(1));
  CHECK(empty.vacuous);
}

TEST_CASE("smith valuations of diagonal pairs") {
  auto p = ValuationMatrixPair::make(diag_powers({1, 0, 3}), diag_powers({0, 2, 0}));
  CHECK(smith_valuations(p) == std::vector<Int>{-2, 1, 3});

  auto same = ValuationMatrixPair::make(diag_powers({1, 2}), diag_powers({1, 2}));
  CHECK(smith_valuations(same) == std::vector<Int>{0, 0});
}

TEST_CASE("smith valuations invariant under unimodular transformation") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    samples::AlphaKInstance inst = samples::random_alpha_k_instance(rng, 2, 3, 2);
    CHECK(smith_valuations(inst.pair) == inst.expected);
    Matrix<QPoly> u = samples::random_unimodular_poly(rng, inst.pair.r());
    Matrix<QPoly> v = samples::random_unimodular_poly(rng, inst.pair.r());
    auto transformed = ValuationMatrixPair::make(u * inst.pair.q1 * v, u * inst.pair.q2 * v);
    CHECK(smith_valuations(transformed) == inst.expected);
  }
}

TEST_CASE("alpha_k identity") {
  auto p = ValuationMatrixPair::make(diag_powers({1, 0, 3}), diag_powers({0, 2, 0}));
  AlphaKReport r = check_alpha_k(p);
  CHECK(r.ord_det_q1 == 4);
  CHECK(r.sum_nonneg_a == 4);
  CHECK(r.equal);

  auto id = ValuationMatrixPair::make(diag_powers({0, 0}), diag_powers({0, 0}));
  AlphaKReport r2 = check_alpha_k(id);
  CHECK(r2.ord_det_q1 == 0);
  CHECK(r2.equal);

  // hypothesis violation: both maps vanish at t = 0
  auto bad = ValuationMatrixPair::make(diag_powers({1, 1}), diag_powers({1, 1}));
  CHECK_THROWS_AS(check_alpha_k(bad), std::domain_error);

  // singular input rejected
  Matrix<QPoly> z(2, 2);
  z(0, 0) = QPoly(1);
  CHECK_THROWS_AS(ValuationMatrixPair::make(z, diag_powers({0, 0})), SingularMatrixError);
}

TEST_CASE("alpha_k on random normal-form instances") {
  Rng rng(7);
  for (int i = 0; i < 25; ++i) {
    samples::AlphaKInstance inst = samples::random_alpha_k_instance(rng);
    AlphaKReport r = check_alpha_k(inst.pair);
    CHECK(r.equal);
    Int expected_sum = 0;
    for (Int a : inst.expected)
      if (a >= 0) expected_sum += a;
    CHECK(r.ord_det_q1 == expected_sum);
  }
}
