#include "locring/rational.hpp"

#include "locring/error.hpp"

namespace locring {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  require(!den_.is_zero(), Errc::division_by_zero, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (num_.is_zero()) {
    den_ = Integer(1);
    return;
  }
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = Integer::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  require(!b.is_zero(), Errc::division_by_zero, "rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational Rational::inverse() const {
  require(!is_zero(), Errc::division_by_zero, "inverse of zero");
  return Rational(den_, num_);
}

int Rational::cmp(const Rational& a, const Rational& b) {
  return Integer::cmp(a.num_ * b.den_, b.num_ * a.den_);
}

std::string Rational::str() const {
  if (den_.is_one()) return num_.str();
  return num_.str() + "/" + den_.str();
}

}  // namespace locring
