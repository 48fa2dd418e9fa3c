#ifndef LOCRING_ZT_HPP
#define LOCRING_ZT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locring/integer.hpp"

namespace locring::zt {

// Dense univariate polynomial over the integers; coefficient i belongs to
// t^i and the top coefficient is nonzero. The zero polynomial has an
// empty coefficient list and no degree.
class ZPoly {
public:
  ZPoly() = default;
  static ZPoly from_coeffs(std::vector<Integer> coeffs);
  static ZPoly constant(Integer c);
  static ZPoly monomial(Integer c, std::size_t deg);

  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const;              // throws zero_polynomial on 0
  const Integer& leading_coeff() const;    // throws zero_polynomial on 0
  bool is_monic() const;
  Integer coeff(std::size_t i) const;      // 0 beyond the degree
  const std::vector<Integer>& coeffs() const { return c_; }

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly operator-() const;
  ZPoly shifted(std::size_t k) const;         // * t^k
  ZPoly scaled(const Integer& c) const;

  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

  std::string str(const std::string& var = "t") const;
  static ZPoly parse(std::string_view text, const std::string& var = "t");

private:
  std::vector<Integer> c_;
  void trim();
};

// Strong (standard) Groebner basis of an ideal of Z[t]: leading terms of
// the basis generate the leading-term ideal, witnessed by S- and
// G-polynomial closure. Each basis element records the Z[t]-combination
// of the original generators it equals; the identity is re-verified on
// every construction.
struct StandardBasis {
  std::vector<ZPoly> input;                    // generators as given
  std::vector<ZPoly> gens;                     // basis, leading coeffs > 0
  std::vector<std::vector<ZPoly>> transform;   // gens[i] = sum_j transform[i][j]*input[j]
};

StandardBasis strong_groebner(const std::vector<ZPoly>& gens);

// Strong reduction of f against the basis: f = remainder + sum
// cofactors[j]*input[j], and remainder = 0 certifies ideal membership.
struct ZReduction {
  ZPoly remainder;
  std::vector<ZPoly> cofactors;  // over the original generators
};

ZReduction reduce_with_cofactors(const ZPoly& f, const StandardBasis& basis);

struct MonicWitness {
  std::vector<ZPoly> cofactors;  // over the original generators
  ZPoly witness;                 // = sum cofactors[j]*input[j], monic
};

struct MonicOutcome {
  StandardBasis basis;
  Integer lc_gcd;  // gcd of standard-basis leading coefficients (0 for the zero ideal)
  std::optional<MonicWitness> witness;  // present iff lc_gcd == 1
};

// Decides whether the ideal meets the monic polynomials and constructs a
// monic witness as an explicit combination of the given generators.
MonicOutcome monic_localization_problem(const std::vector<ZPoly>& gens);

}  // namespace locring::zt

#endif
