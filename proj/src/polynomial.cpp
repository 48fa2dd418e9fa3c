#include "locring/polynomial.hpp"

#include <algorithm>

#include "locring/error.hpp"

namespace locring {

std::string PolyContext::name() const {
  std::string out = field.name() + "[";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ",";
    out += vars[i];
  }
  return out + "]";
}

std::size_t PolyContext::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == name) return i;
  }
  return npos;
}

ContextPtr make_context(FieldSpec field, std::vector<std::string> vars,
                        MonomialOrdering ord) {
  auto ctx = std::make_shared<PolyContext>();
  ctx->field = field;
  ctx->vars = std::move(vars);
  ctx->ord = ord;
  return ctx;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void Polynomial::check_compatible(const Polynomial& a, const Polynomial& b) {
  require(!a.is_null() && !b.is_null(), Errc::ring_mismatch, "null polynomial operand");
  require(same_context(a.ctx_, b.ctx_), Errc::ring_mismatch,
          "ring context mismatch: " + a.ctx_->name() + " vs " + b.ctx_->name());
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  Polynomial p(ctx);
  for (const Term& t : terms) {
    require(t.mon.size() == ctx->nvars(), Errc::length_mismatch,
            "term arity does not match ring context");
    require(t.coeff.spec() == ctx->field, Errc::field_mismatch,
            "coefficient field does not match ring context");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return cmp_monomials(a.mon, b.mon, ctx->ord) == Cmp::greater;
  });
  // Combine equal monomials, drop zeros.
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(const ContextPtr& ctx, FieldElement c) {
  Polynomial p(ctx);
  if (!c.is_zero()) p.terms_.push_back({std::move(c), Monomial(ctx->nvars())});
  return p;
}

Polynomial Polynomial::constant_int(const ContextPtr& ctx, long long c) {
  return constant(ctx, FieldElement::from_int(ctx->field, c));
}

Polynomial Polynomial::variable(const ContextPtr& ctx, std::size_t var, uint32_t exp) {
  require(var < ctx->nvars(), Errc::unknown_variable, "variable index out of range");
  Polynomial p(ctx);
  if (exp == 0) return constant_int(ctx, 1);
  Monomial m(ctx->nvars());
  m[var] = exp;
  p.terms_.push_back({FieldElement::one(ctx->field), std::move(m)});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_unit());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mon.is_unit() && terms_[0].coeff.is_one();
}

uint64_t Polynomial::total_degree() const {
  uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mon.total_degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  require(!terms_.empty(), Errc::zero_polynomial, "zero polynomial has no leading term");
  return terms_.front();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial::check_compatible(a, b);
  Polynomial out(a.ctx_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& ord = a.ctx_->ord;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    Cmp c = cmp_monomials(a.terms_[i].mon, b.terms_[j].mon, ord);
    if (c == Cmp::greater) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (c == Cmp::less) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      FieldElement s = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!s.is_zero()) out.terms_.push_back({std::move(s), a.terms_[i].mon});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
  Polynomial out(ctx_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({-t.coeff, t.mon});
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial::check_compatible(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ctx_);
  // Multiply by the shorter operand termwise, accumulating via merge.
  const Polynomial& big = a.terms_.size() >= b.terms_.size() ? a : b;
  const Polynomial& small = a.terms_.size() >= b.terms_.size() ? b : a;
  Polynomial acc(a.ctx_);
  for (const Term& t : small.terms_) {
    acc += big.times_term(t.coeff, t.mon);
  }
  return acc;
}

Polynomial Polynomial::times_term(const FieldElement& c, const Monomial& m) const {
  require(!is_null(), Errc::ring_mismatch, "null polynomial operand");
  Polynomial out(ctx_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    FieldElement nc = t.coeff * c;
    if (!nc.is_zero()) out.terms_.push_back({std::move(nc), t.mon * m});
  }
  return out;  // multiplicative orderings preserve sortedness
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  return times_term(c, Monomial(ctx_->nvars()));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_term().coeff.inverse());
}

Polynomial Polynomial::without_leading_term() const {
  Polynomial out(ctx_);
  if (terms_.size() > 1) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

Polynomial Polynomial::with_context(const ContextPtr& ctx) const {
  require(!is_null(), Errc::ring_mismatch, "null polynomial operand");
  require(ctx->field == ctx_->field && ctx->vars == ctx_->vars, Errc::ring_mismatch,
          "cannot transport polynomial between unrelated contexts");
  return from_terms(ctx, terms_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.is_null() || b.is_null()) return a.is_null() && b.is_null();
  Polynomial::check_compatible(a, b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mon != b.terms_[i].mon) return false;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

}  // namespace locring
