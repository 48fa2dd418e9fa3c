#include "locring/field.hpp"

#include "locring/error.hpp"

namespace locring {

bool is_prime_u32(uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(uint32_t p) {
  require(is_prime_u32(p), Errc::composite_modulus,
          "modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{Kind::prime, p};
}

std::string FieldSpec::name() const {
  return kind == Kind::rationals ? "QQ" : "GF(" + std::to_string(p) + ")";
}

namespace {

uint64_t fp_inv(uint64_t a, uint64_t p) {
  require(a != 0, Errc::division_by_zero, "prime-field division by zero");
  // Extended Euclid on machine words; p < 2^32 so products fit in int64.
  int64_t t = 0, new_t = 1;
  int64_t r = int64_t(p), new_r = int64_t(a);
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += int64_t(p);
  return uint64_t(t);
}

}  // namespace

FieldElement FieldElement::zero(const FieldSpec& spec) {
  FieldElement e;
  e.spec_ = spec;
  return e;
}

FieldElement FieldElement::one(const FieldSpec& spec) { return from_int(spec, 1); }

FieldElement FieldElement::from_int(const FieldSpec& spec, long long v) {
  return from_integer(spec, Integer(v));
}

FieldElement FieldElement::from_integer(const FieldSpec& spec, const Integer& v) {
  FieldElement e;
  e.spec_ = spec;
  if (spec.kind == FieldSpec::Kind::rationals) {
    e.q_ = Rational(v);
  } else {
    Integer q, r;
    Integer::divmod_floor(v, Integer((long long)spec.p), q, r);
    e.r_ = uint64_t(r.to_long());
  }
  return e;
}

FieldElement FieldElement::from_fraction(const FieldSpec& spec, const Integer& num,
                                         const Integer& den) {
  require(!den.is_zero(), Errc::division_by_zero, "zero denominator literal");
  FieldElement e;
  e.spec_ = spec;
  if (spec.kind == FieldSpec::Kind::rationals) {
    e.q_ = Rational(num, den);
    return e;
  }
  FieldElement n = from_integer(spec, num);
  FieldElement d = from_integer(spec, den);
  require(!d.is_zero(), Errc::coefficient_not_in_field,
          "denominator " + den.str() + " vanishes mod " + std::to_string(spec.p));
  return n / d;
}

bool FieldElement::is_zero() const {
  return spec_.kind == FieldSpec::Kind::rationals ? q_.is_zero() : r_ == 0;
}

bool FieldElement::is_one() const {
  return spec_.kind == FieldSpec::Kind::rationals ? q_.is_one() : r_ == 1;
}

const Rational& FieldElement::rational() const {
  require(spec_.kind == FieldSpec::Kind::rationals, Errc::field_mismatch,
          "not a rational element");
  return q_;
}

uint64_t FieldElement::residue() const {
  require(spec_.kind == FieldSpec::Kind::prime, Errc::field_mismatch,
          "not a prime-field element");
  return r_;
}

void FieldElement::check_same(const FieldElement& a, const FieldElement& b) {
  require(a.spec_ == b.spec_, Errc::field_mismatch,
          "mixed fields: " + a.spec_.name() + " vs " + b.spec_.name());
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  FieldElement out = a;
  if (a.spec_.kind == FieldSpec::Kind::rationals) {
    out.q_ = a.q_ + b.q_;
  } else {
    out.r_ = (a.r_ + b.r_) % a.spec_.p;
  }
  return out;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  FieldElement out = a;
  if (a.spec_.kind == FieldSpec::Kind::rationals) {
    out.q_ = a.q_ - b.q_;
  } else {
    out.r_ = (a.r_ + a.spec_.p - b.r_) % a.spec_.p;
  }
  return out;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  FieldElement out = a;
  if (a.spec_.kind == FieldSpec::Kind::rationals) {
    out.q_ = a.q_ * b.q_;
  } else {
    out.r_ = (a.r_ * b.r_) % a.spec_.p;
  }
  return out;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  require(!b.is_zero(), Errc::division_by_zero, "field division by zero");
  FieldElement out = a;
  if (a.spec_.kind == FieldSpec::Kind::rationals) {
    out.q_ = a.q_ / b.q_;
  } else {
    out.r_ = (a.r_ * fp_inv(b.r_, a.spec_.p)) % a.spec_.p;
  }
  return out;
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  if (spec_.kind == FieldSpec::Kind::rationals) {
    out.q_ = -q_;
  } else if (r_ != 0) {
    out.r_ = spec_.p - r_;
  }
  return out;
}

FieldElement FieldElement::inverse() const {
  return one(spec_) / *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!(a.spec_ == b.spec_)) return false;
  return a.spec_.kind == FieldSpec::Kind::rationals ? a.q_ == b.q_ : a.r_ == b.r_;
}

bool FieldElement::prints_negative() const {
  return spec_.kind == FieldSpec::Kind::rationals && q_.sign() < 0;
}

std::string FieldElement::str_abs() const {
  if (spec_.kind == FieldSpec::Kind::rationals) {
    return q_.sign() < 0 ? (-q_).str() : q_.str();
  }
  return std::to_string(r_);
}

std::string FieldElement::str() const {
  return spec_.kind == FieldSpec::Kind::rationals ? q_.str() : std::to_string(r_);
}

}  // namespace locring
