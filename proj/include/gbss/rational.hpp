#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace gbss {

// All arithmetic in this library is exact. Rationals are GMP mpq_class,
// integer data (weights, coweights, Euler characteristics) is int64.
using Rat = mpq_class;
using Int = long long;

inline Rat ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parse "p/q" or "p" (arbitrary precision). Throws std::invalid_argument.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

/// Canonical "p/q" form; integers print without the "/1".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline int rat_sign(const Rat& r) { return sgn(r); }

inline Int sum(const std::vector<Int>& v) {
  Int s = 0;
  for (Int x : v) s += x;
  return s;
}

}  // namespace gbss
