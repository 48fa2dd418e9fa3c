#ifndef LOCRING_FIELD_HPP
#define LOCRING_FIELD_HPP

#include <cstdint>
#include <string>

#include "locring/rational.hpp"

namespace locring {

// Coefficient field descriptor: the rationals or a prime field F_p.
// Primality of p is checked eagerly; a composite modulus is a
// construction error.
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  uint32_t p = 0;

  static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
  static FieldSpec prime_field(uint32_t p);  // throws composite_modulus

  bool operator==(const FieldSpec&) const = default;
  std::string name() const;
};

bool is_prime_u32(uint32_t p);

// One element of a FieldSpec field. Values are immutable; arithmetic on
// elements of different fields throws field_mismatch.
class FieldElement {
public:
  FieldElement() : spec_(FieldSpec::rationals()) {}

  static FieldElement zero(const FieldSpec& spec);
  static FieldElement one(const FieldSpec& spec);
  static FieldElement from_int(const FieldSpec& spec, long long v);
  static FieldElement from_integer(const FieldSpec& spec, const Integer& v);
  // Over F_p requires den invertible mod p (coefficient_not_in_field otherwise).
  static FieldElement from_fraction(const FieldSpec& spec, const Integer& num,
                                    const Integer& den);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  const Rational& rational() const;  // requires rationals
  uint64_t residue() const;          // requires prime

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement inverse() const;  // throws division_by_zero on 0

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  // True for rationals with negative sign; prime-field residues have no sign.
  bool prints_negative() const;
  // Magnitude formatting partner of prints_negative (|value| for rationals).
  std::string str_abs() const;
  std::string str() const;

private:
  FieldSpec spec_;
  Rational q_;        // rationals payload
  uint64_t r_ = 0;    // prime payload, 0 <= r_ < p
  static void check_same(const FieldElement& a, const FieldElement& b);
};

}  // namespace locring

#endif
