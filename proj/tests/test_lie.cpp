#include <doctest.h>

#include <algorithm>
#include <set>

#include "gbss/lie.hpp"

using namespace gbss;
using namespace gbss::lie;

namespace {

// Independent oracle for the dual weight: the unique dominant vector in
// the Weyl orbit of -lambda. The Weyl group acts by permutations (A),
// signed permutations (B, C), and evenly-signed permutations (D).
std::vector<Int> dominant_orbit_representative(const RootSystem& rs, std::vector<Int> v) {
  int n = static_cast<int>(v.size());
  std::vector<std::vector<Int>> orbit;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<Int> base(n);
    for (int i = 0; i < n; ++i) base[i] = v[perm[i]];
    if (rs.family == Family::A) {
      orbit.push_back(base);
      continue;
    }
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (rs.family == Family::D && __builtin_popcount(mask) % 2 == 1) continue;
      std::vector<Int> w(base);
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) w[i] = -w[i];
      orbit.push_back(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (auto& w : orbit) {
    if (rs.family == Family::A) {
      // normalize modulo the (1,...,1) direction so the last entry is 0
      Int last = w.back();
      for (auto& x : w) x -= last;
    }
    bool dominant = true;
    for (int i = 0; i + 1 < n; ++i)
      if (w[i] < w[i + 1]) dominant = false;
    if (rs.family == Family::D && n >= 2 && w[n - 2] < std::abs(w[n - 1])) dominant = false;
    if (rs.family == Family::B || rs.family == Family::C)
      if (w.back() < 0) dominant = false;
    if (dominant) return w;
  }
  FAIL("no dominant representative found");
  return {};
}

std::vector<Int> negate(const std::vector<Int>& v) {
  std::vector<Int> w(v);
  for (auto& x : w) x = -x;
  return w;
}

}  // namespace

TEST_CASE("root system basics") {
  RootSystem c2 = RootSystem::make(Family::C, 2);
  CHECK(c2.theta() == std::vector<Int>{2, 0});
  CHECK(c2.theta_covector() == std::vector<Int>{1, 0});

  RootSystem a2 = RootSystem::make(Family::A, 2);
  CHECK(a2.coord_len() == 3);
  // pairing(theta, theta_covector) = 2 in every family
  for (const RootSystem& rs : {RootSystem::make(Family::A, 3), RootSystem::make(Family::B, 2),
                               RootSystem::make(Family::C, 3), RootSystem::make(Family::D, 3)}) {
    auto t = rs.theta();
    auto tv = rs.theta_covector();
    Int p = 0;
    for (size_t i = 0; i < t.size(); ++i) p += t[i] * tv[i];
    CHECK(p == 2);
  }
  CHECK_THROWS(RootSystem::make(Family::D, 2));
  CHECK_THROWS(RootSystem::make(Family::B, 1));
}

TEST_CASE("weight validation") {
  RootSystem a2 = RootSystem::make(Family::A, 2);
  CHECK_THROWS(make_weight(a2, {2, 0}));        // wrong length
  CHECK_THROWS(make_weight(a2, {2, 0, 1}));     // last entry nonzero
  CHECK_THROWS(make_weight(a2, {0, 2, 0}));     // not decreasing
  RootSystem d3 = RootSystem::make(Family::D, 3);
  CHECK_NOTHROW(make_weight(d3, {2, 1, -1}));
  CHECK_THROWS(make_weight(d3, {2, 1, -2}));
  RootSystem a1 = RootSystem::make(Family::A, 1);
  CHECK_THROWS(make_coweight(a1, {1, 0}));      // nonzero sum
  CHECK_NOTHROW(make_coweight(a1, {1, -1}));
}

TEST_CASE("level") {
  CHECK(level(RootSystem::make(Family::C, 2), make_weight(RootSystem::make(Family::C, 2), {3, 1})) == 3);
  CHECK(level(RootSystem::make(Family::B, 2), make_weight(RootSystem::make(Family::B, 2), {2, 0})) == 2);
  CHECK(level(RootSystem::make(Family::A, 2), make_weight(RootSystem::make(Family::A, 2), {0, 0, 0})) == 0);
  CHECK(level(RootSystem::make(Family::D, 3), make_weight(RootSystem::make(Family::D, 3), {2, 1, 1})) == 3);
}

TEST_CASE("dual weight frozen examples") {
  RootSystem a2 = RootSystem::make(Family::A, 2);
  CHECK(dual_weight(a2, make_weight(a2, {2, 0, 0})).coords == std::vector<Int>{2, 2, 0});
  RootSystem c2 = RootSystem::make(Family::C, 2);
  CHECK(dual_weight(c2, make_weight(c2, {3, 1})).coords == std::vector<Int>{3, 1});
  RootSystem a1 = RootSystem::make(Family::A, 1);
  CHECK(dual_weight(a1, make_weight(a1, {2, 0})).coords == std::vector<Int>{2, 0});
  RootSystem d3 = RootSystem::make(Family::D, 3);
  CHECK(dual_weight(d3, make_weight(d3, {2, 1, 1})).coords == std::vector<Int>{2, 1, -1});
  RootSystem d4 = RootSystem::make(Family::D, 4);
  CHECK(dual_weight(d4, make_weight(d4, {2, 1, 1, 1})).coords == std::vector<Int>{2, 1, 1, 1});
}

TEST_CASE("dual weight agrees with the Weyl orbit oracle") {
  for (const RootSystem& rs : {RootSystem::make(Family::A, 2), RootSystem::make(Family::B, 2),
                               RootSystem::make(Family::C, 2), RootSystem::make(Family::D, 3)}) {
    for (const auto& lambda : enumerate_weights(rs, 3)) {
      auto expected = dominant_orbit_representative(rs, negate(lambda.coords));
      CHECK(dual_weight(rs, lambda).coords == expected);
    }
  }
}

TEST_CASE("dual weight involution and level preservation") {
  for (const RootSystem& rs : {RootSystem::make(Family::A, 3), RootSystem::make(Family::B, 3),
                               RootSystem::make(Family::C, 2), RootSystem::make(Family::D, 3)}) {
    for (const auto& lambda : enumerate_weights(rs, 4)) {
      DominantWeight dual = dual_weight(rs, lambda);
      CHECK(dual_weight(rs, dual) == lambda);
      CHECK(level(rs, dual) == level(rs, lambda));
    }
  }
}

TEST_CASE("pairing") {
  RootSystem a1 = RootSystem::make(Family::A, 1);
  CHECK(pair(make_weight(a1, {2, 0}), make_coweight(a1, {1, -1})) == 2);
  RootSystem b2 = RootSystem::make(Family::B, 2);
  CHECK(pair(make_weight(b2, {2, 0}), make_coweight(b2, {1, 0})) == 2);
  CHECK(pair(make_weight(b2, {2, 0}), make_coweight(b2, {0, 0})) == 0);
  RootSystem a2 = RootSystem::make(Family::A, 2);
  CHECK_THROWS(pair(make_weight(b2, {2, 0}), make_coweight(a2, {1, 0, -1})));

  // type A: shifting all weight entries by a constant does not change the
  // pairing against a zero-sum coweight
  std::vector<Int> lambda{3, 1, 0};
  std::vector<Int> phi{2, -1, -1};
  Int base = 0, shifted = 0;
  for (int i = 0; i < 3; ++i) {
    base += lambda[i] * phi[i];
    shifted += (lambda[i] + 7) * phi[i];
  }
  CHECK(base == shifted);
}

TEST_CASE("pairing is additive in dominance-preserving combinations") {
  RootSystem c2 = RootSystem::make(Family::C, 2);
  for (const auto& lambda : enumerate_weights(c2, 2))
    for (const auto& phi : enumerate_coweights(c2, 1))
      for (const auto& psi : enumerate_coweights(c2, 1)) {
        std::vector<Int> sum_coords{phi.coords[0] + psi.coords[0], phi.coords[1] + psi.coords[1]};
        // sums of dominant coweights stay dominant in type C
        DominantCoweight both = make_coweight(c2, sum_coords);
        CHECK(pair(lambda, both) == pair(lambda, phi) + pair(lambda, psi));
      }
  for (const auto& lambda : enumerate_weights(c2, 1))
    for (const auto& mu : enumerate_weights(c2, 1))
      for (const auto& phi : enumerate_coweights(c2, 2)) {
        DominantWeight both = make_weight(c2, {lambda.coords[0] + mu.coords[0], lambda.coords[1] + mu.coords[1]});
        CHECK(pair(both, phi) == pair(lambda, phi) + pair(mu, phi));
      }
}

TEST_CASE("embed_coweight frozen examples and tracelessness") {
  RepId a1 = RepId::make(RepTag::AStdPlusDual, 1);
  CHECK(embed_coweight(a1, make_coweight(a1.root_system(), {1, -1})) == std::vector<Int>{1, -1, -1, 1});
  RepId b2 = RepId::make(RepTag::BStd, 2);
  CHECK(embed_coweight(b2, make_coweight(b2.root_system(), {1, 0})) == std::vector<Int>{1, 0, -1, 0, 0});
  RepId c2 = RepId::make(RepTag::CStd, 2);
  CHECK(embed_coweight(c2, make_coweight(c2.root_system(), {0, 0})) == std::vector<Int>{0, 0, 0, 0});

  for (RepId rep : {a1, b2, c2, RepId::make(RepTag::DStd, 3)}) {
    for (const auto& phi : enumerate_coweights(rep.root_system(), 2)) {
      auto entries = embed_coweight(rep, phi);
      CHECK(sum(entries) == 0);
      CHECK(static_cast<int>(entries.size()) == rep.dim());
    }
  }
}

TEST_CASE("dynkin index anchors") {
  for (int rank = 1; rank <= 3; ++rank) CHECK(dynkin_index(RepId::make(RepTag::AStdPlusDual, rank)) == 2);
  for (int rank = 1; rank <= 3; ++rank) CHECK(dynkin_index(RepId::make(RepTag::CStd, rank)) == 1);
  for (int rank = 2; rank <= 3; ++rank) CHECK(dynkin_index(RepId::make(RepTag::BStd, rank)) == 2);
  for (int rank = 3; rank <= 4; ++rank) CHECK(dynkin_index(RepId::make(RepTag::DStd, rank)) == 2);
}

TEST_CASE("enumerate_weights frozen lists") {
  RootSystem a1 = RootSystem::make(Family::A, 1);
  auto w = enumerate_weights(a1, 2);
  REQUIRE(w.size() == 3);
  CHECK(w[0].coords == std::vector<Int>{0, 0});
  CHECK(w[1].coords == std::vector<Int>{1, 0});
  CHECK(w[2].coords == std::vector<Int>{2, 0});

  RootSystem b2 = RootSystem::make(Family::B, 2);
  auto wb = enumerate_weights(b2, 2);
  std::set<std::vector<Int>> got;
  for (const auto& x : wb) got.insert(x.coords);
  CHECK(got == std::set<std::vector<Int>>{{0, 0}, {1, 0}, {2, 0}, {1, 1}});
  CHECK(std::is_sorted(wb.begin(), wb.end()));

  auto zero = enumerate_weights(RootSystem::make(Family::C, 3), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].coords == std::vector<Int>{0, 0, 0});
}

TEST_CASE("enumerate_weights against a brute-force grid") {
  for (const RootSystem& rs : {RootSystem::make(Family::A, 2), RootSystem::make(Family::B, 2),
                               RootSystem::make(Family::C, 2), RootSystem::make(Family::D, 3)}) {
    Int max_level = 3;
    std::set<std::vector<Int>> expected;
    int n = rs.coord_len();
    // every vector with entries in [-max_level, max_level]
    std::vector<Int> v(n, -max_level);
    for (;;) {
      bool dominant = true;
      for (int i = 0; i + 1 < n; ++i)
        if (v[i] < v[i + 1]) dominant = false;
      switch (rs.family) {
        case Family::A: dominant = dominant && v[n - 1] == 0; break;
        case Family::B:
        case Family::C: dominant = dominant && v[n - 1] >= 0; break;
        case Family::D:
          dominant = true;
          for (int i = 0; i + 2 < n; ++i)
            if (v[i] < v[i + 1]) dominant = false;
          dominant = dominant && v[n - 2] >= std::abs(v[n - 1]);
          break;
      }
      if (dominant) {
        Int lv = 0;
        auto tv = rs.theta_covector();
        for (int i = 0; i < n; ++i) lv += v[i] * tv[i];
        if (lv <= max_level) expected.insert(v);
      }
      int k = n - 1;
      while (k >= 0 && v[k] == max_level) v[k--] = -max_level;
      if (k < 0) break;
      ++v[k];
    }
    std::set<std::vector<Int>> got;
    for (const auto& x : enumerate_weights(rs, max_level)) got.insert(x.coords);
    CHECK(got == expected);
  }
}

TEST_CASE("enumerate_coweights frozen lists and bounds") {
  RootSystem a1 = RootSystem::make(Family::A, 1);
  auto ca = enumerate_coweights(a1, 1);
  REQUIRE(ca.size() == 2);
  CHECK(ca[0].coords == std::vector<Int>{0, 0});
  CHECK(ca[1].coords == std::vector<Int>{1, -1});

  RootSystem c2 = RootSystem::make(Family::C, 2);
  auto cc = enumerate_coweights(c2, 1);
  REQUIRE(cc.size() == 3);
  CHECK(cc[0].coords == std::vector<Int>{0, 0});
  CHECK(cc[1].coords == std::vector<Int>{1, 0});
  CHECK(cc[2].coords == std::vector<Int>{1, 1});

  auto zero = enumerate_coweights(RootSystem::make(Family::D, 3), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].coords == std::vector<Int>{0, 0, 0});

  for (const RootSystem& rs : {RootSystem::make(Family::A, 3), RootSystem::make(Family::D, 3)})
    for (const auto& phi : enumerate_coweights(rs, 2))
      for (Int x : phi.coords) CHECK(std::abs(x) <= 2);
}

TEST_CASE("weyl dimension formula") {
  RootSystem a2 = RootSystem::make(Family::A, 2);
  CHECK(weyl_dim(a2, make_weight(a2, {2, 0, 0})) == Rat(6));
  CHECK(weyl_dim(a2, make_weight(a2, {1, 0, 0})) == Rat(3));
  RootSystem b2 = RootSystem::make(Family::B, 2);
  CHECK(weyl_dim(b2, make_weight(b2, {2, 0})) == Rat(14));
  CHECK(weyl_dim(b2, make_weight(b2, {1, 1})) == Rat(10));
  CHECK(weyl_dim(b2, make_weight(b2, {1, 0})) == Rat(5));
  RootSystem c2 = RootSystem::make(Family::C, 2);
  CHECK(weyl_dim(c2, make_weight(c2, {1, 0})) == Rat(4));
  CHECK(weyl_dim(c2, make_weight(c2, {1, 1})) == Rat(5));
  RootSystem d3 = RootSystem::make(Family::D, 3);
  CHECK(weyl_dim(d3, make_weight(d3, {1, 0, 0})) == Rat(6));
}
