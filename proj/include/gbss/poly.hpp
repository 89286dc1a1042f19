#pragma once

// Univariate polynomials over Q and their fraction field. Used for the
// t-adic valuation computations: matrices with entries in Q[t] get
// diagonalized over the local ring at t = 0, which needs exact division
// in Q(t).

#include <string>
#include <vector>

#include "gbss/rational.hpp"

namespace gbss {

class QPoly {
 public:
  QPoly() = default;
  QPoly(int c) : c_{Rat(c)} { trim(); }            // NOLINT: implicit from int wanted
  QPoly(const Rat& c) : c_{c} { trim(); }          // NOLINT
  explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// c * t^k
  static QPoly monomial(const Rat& c, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  /// t-adic valuation; throws for the zero polynomial.
  int valuation() const;
  const Rat& coeff(int k) const;
  Rat eval(const Rat& x) const;
  Rat eval_zero() const { return c_.empty() ? Rat(0) : c_[0]; }
  const Rat& leading() const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  QPoly scaled(const Rat& c) const;
  QPoly monic() const;
  /// Quotient and remainder by a nonzero divisor.
  std::pair<QPoly, QPoly> divrem(const QPoly& d) const;

  std::string str() const;  // human-readable, e.g. "2*t^3 - 1/2*t + 1"

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;  // c_[k] is the t^k coefficient; no trailing zeros
};

QPoly gcd(const QPoly& a, const QPoly& b);  // monic gcd

/// Element of Q(t), normalized: denominator monic, gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}    // NOLINT
  RatFunc(QPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RatFunc(QPoly num, QPoly den);

  bool is_zero() const { return num_.is_zero(); }
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  /// t-adic valuation; throws for zero.
  int valuation() const { return num_.valuation() - den_.valuation(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string str() const;

 private:
  void normalize();
  QPoly num_, den_;
};

}  // namespace gbss
