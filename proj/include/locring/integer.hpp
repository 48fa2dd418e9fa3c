#ifndef LOCRING_INTEGER_HPP
#define LOCRING_INTEGER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace locring {

// Arbitrary-precision signed integer, sign + magnitude in base 2^32.
// Values are canonical: no leading zero limbs, zero has sign 0 and an
// empty magnitude. Immutable value semantics; arithmetic never wraps.
class Integer {
public:
  Integer() : sign_(0) {}
  Integer(long long v);  // NOLINT: implicit by design, mirrors int literals
  static Integer from_string(std::string_view text);  // decimal, optional sign

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  bool is_negative() const { return sign_ < 0; }
  int sign() const { return sign_; }

  std::string str() const;
  // Value if it fits in long long, throws otherwise.
  long long to_long() const;
  bool fits_long() const;
  std::size_t limb_count() const { return mag_.size(); }

  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);
  Integer operator-() const;

  Integer& operator+=(const Integer& b) { return *this = *this + b; }
  Integer& operator-=(const Integer& b) { return *this = *this - b; }
  Integer& operator*=(const Integer& b) { return *this = *this * b; }

  // Truncated division: quotient rounds toward zero, |r| < |b|,
  // sign(r) = sign(a). Throws on b = 0.
  static void divmod_trunc(const Integer& a, const Integer& b, Integer& q, Integer& r);
  // Floored division: r has the sign of b, 0 <= |r| < |b|.
  static void divmod_floor(const Integer& a, const Integer& b, Integer& q, Integer& r);
  friend Integer operator/(const Integer& a, const Integer& b);  // truncated
  friend Integer operator%(const Integer& a, const Integer& b);  // truncated

  static int cmp(const Integer& a, const Integer& b);
  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Integer& a, const Integer& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Integer& a, const Integer& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Integer& a, const Integer& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Integer& a, const Integer& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Integer& a, const Integer& b) { return cmp(a, b) >= 0; }

  Integer abs() const;

  static Integer gcd(Integer a, Integer b);  // >= 0
  // g = gcd(a, b) >= 0 with u*a + v*b = g.
  static void extended_gcd(const Integer& a, const Integer& b,
                           Integer& g, Integer& u, Integer& v);

private:
  int sign_;                    // -1, 0, +1
  std::vector<uint32_t> mag_;   // little-endian limbs

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);  // a >= b
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

struct ExtendedGcd {
  Integer g, u, v;
};

inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  ExtendedGcd out;
  Integer::extended_gcd(a, b, out.g, out.u, out.v);
  return out;
}

}  // namespace locring

#endif
