#include "locring/poly_io.hpp"

#include <cctype>

#include "locring/error.hpp"

namespace locring {

namespace {

class Parser {
public:
  Parser(std::string_view text, const ContextPtr& ctx) : text_(text), ctx_(ctx) {}

  Polynomial run() {
    skip_ws();
    require_more("empty polynomial");
    std::vector<Term> terms;
    int sign = read_optional_sign();
    parse_term(sign, terms);
    for (skip_ws(); pos_ < text_.size(); skip_ws()) {
      char c = text_[pos_];
      if (c != '+' && c != '-') {
        fail(Errc::syntax_error, at("expected '+' or '-' between terms"), pos_);
      }
      ++pos_;
      skip_ws();
      // Allow a signed coefficient right after the separator.
      int s = (c == '-' ? -1 : 1) * read_optional_sign();
      parse_term(s, terms);
    }
    return Polynomial::from_terms(ctx_, std::move(terms));
  }

private:
  std::string_view text_;
  const ContextPtr& ctx_;
  std::size_t pos_ = 0;

  std::string at(const std::string& msg) const {
    return msg + " at byte " + std::to_string(pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void require_more(const char* what) {
    if (pos_ >= text_.size()) fail(Errc::syntax_error, at(std::string("unexpected end: ") + what), pos_);
  }

  int read_optional_sign() {
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      int s = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
      return s;
    }
    return 1;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool at_ident() const {
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Integer read_uint() {
    require_more("expected number");
    if (!at_digit()) fail(Errc::syntax_error, at("expected number"), pos_);
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return Integer::from_string(text_.substr(start, pos_ - start));
  }

  std::string read_ident() {
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_varpow(Monomial& mon) {
    std::size_t name_pos = pos_;
    std::string name = read_ident();
    std::size_t var = ctx_->var_index(name);
    if (var == PolyContext::npos) {
      fail(Errc::unknown_variable,
           "unknown variable '" + name + "' in " + ctx_->name() + " at byte " +
               std::to_string(name_pos),
           name_pos);
    }
    uint32_t exp = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      std::size_t exp_pos = pos_;
      Integer e = read_uint();
      if (!e.fits_long() || e.to_long() > 100000) {
        fail(Errc::syntax_error, "exponent too large at byte " + std::to_string(exp_pos), exp_pos);
      }
      exp = uint32_t(e.to_long());
    }
    mon[var] += exp;
  }

  void parse_term(int sign, std::vector<Term>& terms) {
    require_more("expected term");
    FieldElement coeff = FieldElement::one(ctx_->field);
    Monomial mon(ctx_->nvars());
    if (at_digit()) {
      Integer num = read_uint();
      Integer den(1);
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::size_t den_pos = pos_;
        den = read_uint();
        if (den.is_zero()) {
          fail(Errc::division_by_zero, "zero denominator at byte " + std::to_string(den_pos),
               den_pos);
        }
      }
      coeff = FieldElement::from_fraction(ctx_->field, num, den);
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (!at_ident()) fail(Errc::syntax_error, at("expected variable after '*'"), pos_);
        parse_varpow(mon);
        skip_ws();
      }
    } else if (at_ident()) {
      parse_varpow(mon);
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (!at_ident()) fail(Errc::syntax_error, at("expected variable after '*'"), pos_);
        parse_varpow(mon);
        skip_ws();
      }
    } else {
      fail(Errc::syntax_error, at("expected coefficient or variable"), pos_);
    }
    if (sign < 0) coeff = -coeff;
    if (!coeff.is_zero()) terms.push_back({std::move(coeff), std::move(mon)});
  }
};

std::string format_monomial(const Monomial& m, const PolyContext& ctx) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ctx.vars[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

Polynomial parse_poly(std::string_view text, const ContextPtr& ctx) {
  return Parser(text, ctx).run();
}

std::string format_poly(const Polynomial& p) {
  if (p.is_null()) return "<null>";
  if (p.is_zero()) return "0";
  const PolyContext& ctx = *p.context();
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    bool neg = t.coeff.prints_negative();
    std::string mag = t.coeff.str_abs();
    std::string mon = format_monomial(t.mon, ctx);
    std::string piece;
    if (mon.empty()) {
      piece = mag;
    } else if (mag == "1") {
      piece = mon;
    } else {
      piece = mag + "*" + mon;
    }
    if (first) {
      out = (neg ? "-" : "") + piece;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace locring
