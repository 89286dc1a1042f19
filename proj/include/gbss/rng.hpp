#pragma once

#include <cstdint>
#include <random>

#include "gbss/rational.hpp"

namespace gbss {

// Seeded generator for reproducible test instances. mt19937_64 has a
// fully specified output sequence; draws below avoid
// uniform_int_distribution on purpose, since its mapping is
// implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  /// Uniform-ish integer in [lo, hi] (modulo draw; bias is irrelevant here).
  Int range(Int lo, Int hi) {
    if (hi < lo) throw std::invalid_argument("Rng::range: empty interval");
    return lo + static_cast<Int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  bool coin() { return (next() & 1u) != 0; }

  /// Small rational with |num| <= max_num, 1 <= den <= max_den.
  Rat small_rational(Int max_num, Int max_den) {
    return ratio(static_cast<long>(range(-max_num, max_num)), static_cast<long>(range(1, max_den)));
  }

  Rat nonzero_small_rational(Int max_num, Int max_den) {
    for (;;) {
      Rat r = small_rational(max_num, max_den);
      if (r != 0) return r;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gbss
