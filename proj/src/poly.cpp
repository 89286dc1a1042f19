#include "gbss/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace gbss {

QPoly QPoly::monomial(const Rat& c, int k) {
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return QPoly(std::move(v));
}

int QPoly::valuation() const {
  if (c_.empty()) throw std::domain_error("valuation of zero polynomial");
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  throw std::logic_error("unreachable");
}

const Rat& QPoly::coeff(int k) const {
  static const Rat kZero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

const Rat& QPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < v.size(); ++k) v[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
  return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < v.size(); ++k) v[k] = coeff(static_cast<int>(k)) - o.coeff(static_cast<int>(k));
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (c_.empty() || o.c_.empty()) return QPoly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::operator-() const { return scaled(Rat(-1)); }

QPoly QPoly::scaled(const Rat& c) const {
  std::vector<Rat> v(c_);
  for (auto& x : v) x *= c;
  return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(Rat(1) / leading());
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  QPoly rem(*this);
  if (rem.degree() < d.degree()) return {QPoly(), rem};
  std::vector<Rat> q(rem.degree() - d.degree() + 1);
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    Rat f = rem.leading() / d.leading();
    q[shift] = f;
    rem = rem - d * QPoly::monomial(f, shift);
  }
  return {QPoly(std::move(q)), rem};
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    Rat a = c_[k];
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    first = false;
    Rat mag = abs(a);
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k > 0) {
      if (mag != 1) os << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x.divrem(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  QPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divrem(g).first;
    den_ = den_.divrem(g).first;
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    num_ = num_.scaled(Rat(1) / lead);
    den_ = den_.scaled(Rat(1) / lead);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

std::string RatFunc::str() const {
  if (den_ == QPoly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace gbss
