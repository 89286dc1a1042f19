#include <doctest.h>

#include "gbss/curve.hpp"
#include "gbss/rng.hpp"
#include "gbss/samples.hpp"

using namespace gbss;
using namespace gbss::curve;

namespace {

CurveNumerics two_component_curve(std::vector<Int> polarization) {
  return CurveNumerics::make(2, {{0, 1}}, std::move(polarization), 2);
}

// the running two-component example: r = 2, weights (-1,1)/(0), dims (1,2)/(2)
FlagInput example_flags() {
  return FlagInput::make(2, 2, {ComponentFlag{{-1, 1}, {1, 2}}, ComponentFlag{{0}, {2}}});
}

}  // namespace

TEST_CASE("curve validation") {
  CHECK_THROWS(CurveNumerics::make(2, {}, {1, 1}, 2));          // disconnected
  CHECK_THROWS(CurveNumerics::make(1, {}, {0}, 2));             // bad degree
  CHECK_THROWS(CurveNumerics::make(1, {}, {1}, 1));             // genus too small
  CHECK_THROWS(CurveNumerics::make(2, {{0, 2}}, {1, 1}, 2));    // index out of range
  CHECK_NOTHROW(CurveNumerics::make(1, {{0, 0}}, {3}, 2));      // irreducible one-node
}

TEST_CASE("hilbert polynomial") {
  CurveNumerics c = two_component_curve({1, 1});
  LinearPoly p = hilbert_poly(c, SheafNumerics{{2, 2}, -2});
  CHECK(p.slope == Rat(4));
  CHECK(p.constant == Rat(-2));

  LinearPoly zero = hilbert_poly(c, SheafNumerics{{0, 0}, 0});
  CHECK(zero.slope == Rat(0));
  CHECK(zero.constant == Rat(0));

  CurveNumerics irr = CurveNumerics::make(1, {{0, 0}}, {3}, 2);
  LinearPoly structure = hilbert_poly(irr, SheafNumerics{{1}, -1});
  CHECK(structure.slope == Rat(3));
  CHECK(structure.constant == Rat(-1));
}

TEST_CASE("rank formula") {
  CHECK(rank_formula(two_component_curve({1, 1}), {1, 2}) == ratio(3, 2));
  CHECK(rank_formula(two_component_curve({2, 3}), {1, 0}) == ratio(2, 5));
  for (auto pol : {std::vector<Int>{1, 1}, std::vector<Int>{3, 2}, std::vector<Int>{5, 1}})
    CHECK(rank_formula(two_component_curve(pol), {3, 3}) == Rat(3));
}

TEST_CASE("degree normalization") {
  CurveNumerics c = two_component_curve({1, 1});
  CHECK(degree(c, SheafNumerics{{2, 2}, 2 * (1 - 2)}) == Rat(0));   // chi = r(1-g)
  CHECK(degree(c, SheafNumerics{{1, 1}, -1}) == Rat(0));            // structure sheaf
  CHECK(degree(c, SheafNumerics{{2, 2}, 1}) == Rat(3));
}

TEST_CASE("build_filtration worked example") {
  CurveNumerics c = two_component_curve({1, 1});
  WeightedFiltration f = build_filtration(c, 2, example_flags());
  CHECK(f.mu == std::vector<Int>{-1, 0, 1});
  REQUIRE(f.q() == 2);
  CHECK(f.m == std::vector<Rat>{ratio(1, 2), ratio(1, 2)});
  CHECK(f.dims[0] == std::vector<Int>{1, 0});
  CHECK(f.dims[1] == std::vector<Int>{1, 2});
  CHECK(f.dims[2] == std::vector<Int>{2, 2});
  CHECK(f.ranks == std::vector<Rat>{ratio(1, 2), ratio(3, 2), Rat(2)});
  CHECK(weighted_rank_sum(f) == Rat(1));  // = mu_top
}

TEST_CASE("single component filtration") {
  CurveNumerics c = CurveNumerics::make(1, {{0, 0}}, {1}, 2);
  FlagInput flags = FlagInput::make(1, 2, {ComponentFlag{{-1, 1}, {1, 2}}});
  WeightedFiltration f = build_filtration(c, 2, flags);
  CHECK(f.mu == std::vector<Int>{-1, 1});
  CHECK(f.m == std::vector<Rat>{Rat(1)});
  CHECK(f.ranks[0] == Rat(1));
  CHECK(weighted_rank_sum(f) == Rat(1));
}

TEST_CASE("flag validation") {
  // all components trivial
  CHECK_THROWS(FlagInput::make(2, 2, {ComponentFlag{{0}, {2}}, ComponentFlag{{0}, {2}}}));
  // weighted trace nonzero
  CHECK_THROWS(FlagInput::make(1, 2, {ComponentFlag{{-1, 2}, {1, 2}}}));
  // dims must end at r
  CHECK_THROWS(FlagInput::make(1, 2, {ComponentFlag{{-1, 1}, {1, 3}}}));
  // weights must strictly increase
  CHECK_THROWS(FlagInput::make(1, 2, {ComponentFlag{{1, 1}, {1, 2}}}));
}

TEST_CASE("filtration homogeneity in the weights") {
  CurveNumerics c = two_component_curve({1, 1});
  for (Int scale : {2, 3, 5}) {
    FlagInput scaled = FlagInput::make(
        2, 2, {ComponentFlag{{-scale, scale}, {1, 2}}, ComponentFlag{{0}, {2}}});
    WeightedFiltration f = build_filtration(c, 2, scaled);
    CHECK(weighted_rank_sum(f) == Rat(static_cast<long>(scale)));
  }
}

TEST_CASE("per-component weighted dimension sum equals the top weight") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    samples::FlagSample s = samples::random_flag_sample(rng);
    std::vector<std::pair<int, int>> nodes;
    for (int k = 0; k + 1 < s.components; ++k) nodes.emplace_back(k, k + 1);
    CurveNumerics c = CurveNumerics::make(s.components, nodes, samples::random_polarization(rng, s.components), 2);
    WeightedFiltration f = build_filtration(c, s.r, s.flags);
    for (int i = 0; i < s.components; ++i) {
      Rat total(0);
      for (int j = 0; j < f.q(); ++j) total += f.m[j] * Rat(static_cast<long>(f.dims[j][i]));
      CHECK(total == Rat(static_cast<long>(f.mu.back())));
    }
  }
}

TEST_CASE("semistability quantity worked examples") {
  CurveNumerics c = two_component_curve({1, 1});
  WeightedFiltration f = build_filtration(c, 2, example_flags());
  CHECK(ss_quantity(f, {-2, -2}, -4, 2) == Rat(0));

  // proportional chi values give zero
  // ranks are 1/2 and 3/2, so chi_j = (rk_j / r) chi needs chi divisible by 4
  CHECK(ss_quantity(f, {-1, -3}, -4, 2) == Rat(0));

  CurveNumerics irr = CurveNumerics::make(1, {{0, 0}}, {1}, 2);
  WeightedFiltration single =
      build_filtration(irr, 2, FlagInput::make(1, 2, {ComponentFlag{{-1, 1}, {1, 2}}}));
  CHECK(ss_quantity(single, {0}, -4, 2) == Rat(-4));
}

TEST_CASE("alternative semistability forms") {
  CurveNumerics c = two_component_curve({1, 1});
  WeightedFiltration f = build_filtration(c, 2, example_flags());
  AltForms boundary = ss_alt_forms(f, {-2, -2}, -4, 2);
  CHECK(boundary.form1 == Rat(0));
  CHECK(boundary.form2 == Rat(0));
  CHECK(boundary.agree);

  CurveNumerics irr = CurveNumerics::make(1, {{0, 0}}, {1}, 2);
  WeightedFiltration single =
      build_filtration(irr, 2, FlagInput::make(1, 2, {ComponentFlag{{-1, 1}, {1, 2}}}));
  AltForms unstable = ss_alt_forms(single, {0}, -4, 2);
  CHECK(unstable.form2 == Rat(-4));
  CHECK(unstable.form1 < 0);
  CHECK(unstable.agree);
}

TEST_CASE("alternative forms require a positive top weight") {
  WeightedFiltration f;
  f.r = 2;
  f.mu = {-2, -1};
  f.dims = {{1}, {2}};
  f.ranks = {Rat(1), Rat(2)};
  f.m = {ratio(1, 2)};
  CHECK_THROWS(ss_alt_forms(f, {0}, -4, 2));
}

TEST_CASE("three forms agree in sign on random data") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    samples::FlagSample s = samples::random_flag_sample(rng);
    std::vector<std::pair<int, int>> nodes;
    for (int k = 0; k + 1 < s.components; ++k) nodes.emplace_back(k, k + 1);
    CurveNumerics c = CurveNumerics::make(s.components, nodes, samples::random_polarization(rng, s.components), 2);
    WeightedFiltration f = build_filtration(c, s.r, s.flags);
    AltForms alt = ss_alt_forms(f, s.chi_list, s.chi_total, s.r);
    CHECK(alt.agree);
    // the telescoped form is not just the same sign, it is the same number
    CHECK(alt.form2 == ss_quantity(f, s.chi_list, s.chi_total, s.r));
  }
}

TEST_CASE("polarization independence on random data") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    samples::FlagSample s = samples::random_flag_sample(rng);
    std::vector<std::pair<int, int>> nodes;
    for (int k = 0; k + 1 < s.components; ++k) nodes.emplace_back(k, k + 1);
    std::optional<Rat> ref;
    for (int p = 0; p < 3; ++p) {
      CurveNumerics c =
          CurveNumerics::make(s.components, nodes, samples::random_polarization(rng, s.components), 2);
      WeightedFiltration f = build_filtration(c, s.r, s.flags);
      CHECK(weighted_rank_sum(f) == Rat(static_cast<long>(f.mu.back())));
      Rat q = ss_quantity(f, s.chi_list, s.chi_total, s.r);
      if (!ref)
        ref = q;
      else
        CHECK(q == *ref);
    }
  }
}

TEST_CASE("parameter-space exponent identities") {
  LinearPoly p{Rat(2), Rat(-2)};
  ExponentPair e = git_exponent(2, 1, 2, p, -2);
  CHECK(e.from_multiplicity == Rat(4));
  CHECK(e.from_hilbert_value == Rat(4));

  ExponentPair zero = git_exponent(0, 1, 2, p, -2);
  CHECK(zero.from_multiplicity == Rat(0));

  CHECK_THROWS(git_exponent(2, 1, 2, p, 2));    // chi must be negative
  CHECK_THROWS(git_exponent(2, 1, 2, p, -3));   // chi does not divide P(n) = 2
}
