#include <doctest.h>

#include "gbss/poly.hpp"

using namespace gbss;

namespace {
QPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long x : coeffs) c.emplace_back(x);
  return QPoly(std::move(c));
}
}  // namespace

TEST_CASE("polynomial arithmetic and valuation") {
  QPoly p = poly({0, 0, 3, 1});  // 3t^2 + t^3
  CHECK(p.degree() == 3);
  CHECK(p.valuation() == 2);
  CHECK(p.eval(Rat(2)) == Rat(20));
  CHECK((p - p).is_zero());
  CHECK_THROWS(QPoly().valuation());

  QPoly q = poly({1, 1});  // 1 + t
  CHECK((p * q).degree() == 4);
  CHECK((p * q).coeff(2) == Rat(3));
  CHECK((p * q).coeff(3) == Rat(4));
}

TEST_CASE("division and gcd") {
  QPoly a = poly({-1, 0, 1});  // t^2 - 1
  QPoly b = poly({1, 1});      // t + 1
  auto [quot, rem] = a.divrem(b);
  CHECK(rem.is_zero());
  CHECK(quot == poly({-1, 1}));
  CHECK(gcd(a, b) == b.monic());
  CHECK(gcd(poly({0, 1}), poly({1})) == QPoly(1));
}

TEST_CASE("rational function normalization and valuation") {
  RatFunc f(poly({0, 1}), poly({2}));  // t/2
  CHECK(f.valuation() == 1);
  RatFunc g(poly({0, 0, 2}), poly({0, 1}));  // 2t^2 / t = 2t
  CHECK(g == RatFunc(poly({0, 2})));
  RatFunc h = RatFunc(QPoly(1)) / RatFunc(poly({0, 1}));  // 1/t
  CHECK(h.valuation() == -1);
  CHECK((h * RatFunc(poly({0, 1}))) == RatFunc(QPoly(1)));
  CHECK_THROWS(RatFunc(QPoly(1), QPoly()));
  CHECK((f - f).is_zero());
}
