#ifndef LOCRING_RATIONAL_HPP
#define LOCRING_RATIONAL_HPP

#include <string>

#include "locring/integer.hpp"

namespace locring {

// Exact rational number. Canonical form: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero is 0/1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT
  Rational(Integer num) : num_(std::move(num)), den_(1) {}  // NOLINT
  Rational(Integer num, Integer den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws on 0
  Rational operator-() const;
  Rational inverse() const;  // throws on 0

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  static int cmp(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }

  std::string str() const;  // "p/q" or "p"

private:
  Integer num_, den_;
  void normalize();
};

}  // namespace locring

#endif
