#include "locring/integer.hpp"

#include <algorithm>
#include <bit>

#include "locring/error.hpp"

namespace locring {

namespace {
constexpr uint64_t kBase = uint64_t(1) << 32;
constexpr uint64_t kLoMask = 0xffffffffULL;
}  // namespace

Integer::Integer(long long v) {
  if (v == 0) {
    sign_ = 0;
    return;
  }
  sign_ = v > 0 ? 1 : -1;
  // Avoid overflow on LLONG_MIN by working in unsigned space.
  uint64_t m = v > 0 ? uint64_t(v) : uint64_t(0) - uint64_t(v);
  mag_.push_back(uint32_t(m & kLoMask));
  if (m >> 32) mag_.push_back(uint32_t(m >> 32));
}

void Integer::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int Integer::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> Integer::add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
  const std::vector<uint32_t>& lo = a.size() < b.size() ? a : b;
  const std::vector<uint32_t>& hi = a.size() < b.size() ? b : a;
  std::vector<uint32_t> out(hi.size() + 1, 0);
  uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    uint64_t s = uint64_t(hi[i]) + (i < lo.size() ? lo[i] : 0) + carry;
    out[i] = uint32_t(s & kLoMask);
    carry = s >> 32;
  }
  out[hi.size()] = uint32_t(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> Integer::sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int64_t d = int64_t(a[i]) - (i < b.size() ? int64_t(b[i]) : 0) - borrow;
    if (d < 0) {
      d += int64_t(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = uint32_t(d);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> Integer::mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = uint64_t(out[i + j]) + ai * b[j] + carry;
      out[i + j] = uint32_t(cur & kLoMask);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      uint64_t cur = uint64_t(out[k]) + carry;
      out[k] = uint32_t(cur & kLoMask);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Knuth algorithm D, limb base 2^32.
void Integer::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  q.clear();
  r.clear();
  if (cmp_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    uint64_t d = b[0];
    q.assign(a.size(), 0);
    uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = uint32_t(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r.push_back(uint32_t(rem));
    return;
  }

  const std::size_t n = b.size();
  const std::size_t m = a.size() - n;
  const int s = std::countl_zero(b.back());

  std::vector<uint32_t> v(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = uint32_t((uint64_t(b[i]) << s) & kLoMask);
    if (s && i > 0) v[i] |= uint32_t(uint64_t(b[i - 1]) >> (32 - s));
  }
  std::vector<uint32_t> u(a.size() + 1, 0);
  u[a.size()] = s ? uint32_t(uint64_t(a.back()) >> (32 - s)) : 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    u[i] = uint32_t((uint64_t(a[i]) << s) & kLoMask);
    if (s && i > 0) u[i] |= uint32_t(uint64_t(a[i - 1]) >> (32 - s));
  }

  q.assign(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    uint64_t num = (uint64_t(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / v[n - 1];
    uint64_t rhat = num % v[n - 1];
    while (qhat >= kBase || qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kBase) break;
    }

    // Multiply qhat*v and subtract from u[j..j+n].
    uint64_t borrow = 0;
    uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      uint64_t sub = (p & kLoMask) + borrow;
      if (uint64_t(u[i + j]) >= sub) {
        u[i + j] = uint32_t(uint64_t(u[i + j]) - sub);
        borrow = 0;
      } else {
        u[i + j] = uint32_t(uint64_t(u[i + j]) + kBase - sub);
        borrow = 1;
      }
    }
    uint64_t top_sub = carry + borrow;
    bool negative = uint64_t(u[j + n]) < top_sub;
    u[j + n] = uint32_t(uint64_t(u[j + n]) - top_sub);

    if (negative) {
      // qhat was one too large; add v back.
      --qhat;
      uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        uint64_t t = uint64_t(u[i + j]) + v[i] + c2;
        u[i + j] = uint32_t(t & kLoMask);
        c2 = t >> 32;
      }
      u[j + n] = uint32_t(uint64_t(u[j + n]) + c2);
    }
    q[j] = uint32_t(qhat);
  }

  while (!q.empty() && q.back() == 0) q.pop_back();
  r.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = uint32_t(uint64_t(u[i]) >> s);
    if (s && i + 1 < u.size()) r[i] |= uint32_t((uint64_t(u[i + 1]) << (32 - s)) & kLoMask);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

Integer operator+(const Integer& a, const Integer& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  Integer out;
  if (a.sign_ == b.sign_) {
    out.sign_ = a.sign_;
    out.mag_ = Integer::add_mag(a.mag_, b.mag_);
  } else {
    int c = Integer::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return Integer();
    if (c > 0) {
      out.sign_ = a.sign_;
      out.mag_ = Integer::sub_mag(a.mag_, b.mag_);
    } else {
      out.sign_ = b.sign_;
      out.mag_ = Integer::sub_mag(b.mag_, a.mag_);
    }
  }
  out.trim();
  return out;
}

Integer operator-(const Integer& a, const Integer& b) { return a + (-b); }

Integer Integer::operator-() const {
  Integer out = *this;
  out.sign_ = -out.sign_;
  return out;
}

Integer operator*(const Integer& a, const Integer& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return Integer();
  Integer out;
  out.sign_ = a.sign_ * b.sign_;
  out.mag_ = Integer::mul_mag(a.mag_, b.mag_);
  out.trim();
  return out;
}

void Integer::divmod_trunc(const Integer& a, const Integer& b, Integer& q, Integer& r) {
  require(!b.is_zero(), Errc::division_by_zero, "integer division by zero");
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

void Integer::divmod_floor(const Integer& a, const Integer& b, Integer& q, Integer& r) {
  divmod_trunc(a, b, q, r);
  if (!r.is_zero() && (r.sign() != b.sign())) {
    q -= Integer(1);
    r += b;
  }
}

Integer operator/(const Integer& a, const Integer& b) {
  Integer q, r;
  Integer::divmod_trunc(a, b, q, r);
  return q;
}

Integer operator%(const Integer& a, const Integer& b) {
  Integer q, r;
  Integer::divmod_trunc(a, b, q, r);
  return r;
}

int Integer::cmp(const Integer& a, const Integer& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c : -c;
}

Integer Integer::abs() const {
  Integer out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

Integer Integer::gcd(Integer a, Integer b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    Integer q, r;
    divmod_trunc(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

void Integer::extended_gcd(const Integer& a, const Integer& b,
                           Integer& g, Integer& u, Integer& v) {
  Integer old_r = a.abs(), r = b.abs();
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q, rem;
    divmod_trunc(old_r, r, q, rem);
    old_r = std::move(r);
    r = std::move(rem);
    Integer ns = old_s - q * s;
    old_s = std::move(s);
    s = std::move(ns);
    Integer nt = old_t - q * t;
    old_t = std::move(t);
    t = std::move(nt);
  }
  g = std::move(old_r);
  u = a.is_negative() ? -old_s : old_s;
  v = b.is_negative() ? -old_t : old_t;
}

bool Integer::fits_long() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  uint64_t m = (uint64_t(mag_[1]) << 32) | mag_[0];
  if (sign_ > 0) return m <= uint64_t(0x7fffffffffffffffULL);
  return m <= uint64_t(0x8000000000000000ULL);
}

long long Integer::to_long() const {
  require(fits_long(), Errc::internal, "integer too large for long long");
  if (mag_.empty()) return 0;
  uint64_t m = mag_[0];
  if (mag_.size() > 1) m |= uint64_t(mag_[1]) << 32;
  return sign_ > 0 ? (long long)m : -(long long)m;
}

std::string Integer::str() const {
  if (is_zero()) return "0";
  std::vector<uint32_t> work = mag_;
  std::string digits;
  // Peel 9 decimal digits at a time.
  while (!work.empty()) {
    uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | work[i];
      work[i] = uint32_t(cur / 1000000000ULL);
      rem = cur % 1000000000ULL;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(char('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Integer Integer::from_string(std::string_view text) {
  std::size_t i = 0;
  int sign = 1;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') sign = -1;
    ++i;
  }
  require(i < text.size(), Errc::syntax_error, "empty integer literal");
  Integer out;
  Integer chunk_base(1000000000LL);
  std::size_t pos = i;
  while (pos < text.size()) {
    std::size_t len = std::min<std::size_t>(9, text.size() - pos);
    uint64_t chunk = 0;
    Integer scale(1);
    for (std::size_t k = 0; k < len; ++k) {
      char c = text[pos + k];
      require(c >= '0' && c <= '9', Errc::syntax_error, "bad digit in integer literal");
      chunk = chunk * 10 + uint64_t(c - '0');
    }
    for (std::size_t k = 0; k < len; ++k) scale *= Integer(10);
    out = out * scale + Integer((long long)chunk);
    pos += len;
  }
  if (sign < 0) out = -out;
  return out;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::field_mismatch: return "field-mismatch";
    case Errc::ring_mismatch: return "ring-mismatch";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::zero_polynomial: return "zero-polynomial";
    case Errc::syntax_error: return "syntax-error";
    case Errc::unknown_variable: return "unknown-variable";
    case Errc::coefficient_not_in_field: return "coefficient-not-in-field";
    case Errc::composite_modulus: return "composite-modulus";
    case Errc::not_a_syzygy: return "not-a-syzygy";
    case Errc::not_a_localized_syzygy: return "not-a-localized-syzygy";
    case Errc::set_mismatch: return "set-mismatch";
    case Errc::bad_problem_file: return "bad-problem-file";
    case Errc::unsupported: return "unsupported";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace locring
