#ifndef LOCRING_POLYNOMIAL_HPP
#define LOCRING_POLYNOMIAL_HPP

#include <memory>
#include <string>
#include <vector>

#include "locring/field.hpp"
#include "locring/monomial.hpp"

namespace locring {

// Ambient data of a polynomial ring k[x_1,...,x_n]: coefficient field,
// variable names and the monomial ordering terms are kept sorted by.
struct PolyContext {
  FieldSpec field;
  std::vector<std::string> vars;
  MonomialOrdering ord;

  std::size_t nvars() const { return vars.size(); }
  bool operator==(const PolyContext&) const = default;
  std::string name() const;
  // Index of a variable name, or npos.
  std::size_t var_index(const std::string& name) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

using ContextPtr = std::shared_ptr<const PolyContext>;

ContextPtr make_context(FieldSpec field, std::vector<std::string> vars,
                        MonomialOrdering ord);
bool same_context(const ContextPtr& a, const ContextPtr& b);

struct Term {
  FieldElement coeff;  // nonzero by invariant
  Monomial mon;
};

// Sparse multivariate polynomial: terms strictly descending under the
// context ordering, no zero coefficients, no repeated monomials. The
// zero polynomial has an empty term list. Immutable value semantics.
class Polynomial {
public:
  Polynomial() = default;  // null (no context); only valid as a placeholder
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);
  static Polynomial constant(const ContextPtr& ctx, FieldElement c);
  static Polynomial constant_int(const ContextPtr& ctx, long long c);
  static Polynomial variable(const ContextPtr& ctx, std::size_t var, uint32_t exp = 1);

  const ContextPtr& context() const { return ctx_; }
  bool is_null() const { return ctx_ == nullptr; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  uint64_t total_degree() const;  // 0 for the zero polynomial

  const Term& leading_term() const;  // throws zero_polynomial

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial times_term(const FieldElement& c, const Monomial& m) const;
  Polynomial scaled(const FieldElement& c) const;
  Polynomial monic() const;  // divide by leading coefficient; zero stays zero
  // Copy with the leading term removed.
  Polynomial without_leading_term() const;

  // Same polynomial re-canonicalized in another context (same field and
  // variables, possibly different ordering).
  Polynomial with_context(const ContextPtr& ctx) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
  ContextPtr ctx_;
  std::vector<Term> terms_;
  static void check_compatible(const Polynomial& a, const Polynomial& b);
};

}  // namespace locring

#endif
