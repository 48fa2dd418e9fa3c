#include "locring/zt.hpp"

#include <algorithm>

#include "locring/error.hpp"
#include "locring/poly_io.hpp"

namespace locring::zt {

void ZPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ZPoly ZPoly::from_coeffs(std::vector<Integer> coeffs) {
  ZPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

ZPoly ZPoly::constant(Integer c) { return from_coeffs({std::move(c)}); }

ZPoly ZPoly::monomial(Integer c, std::size_t deg) {
  std::vector<Integer> v(deg + 1, Integer(0));
  v[deg] = std::move(c);
  return from_coeffs(std::move(v));
}

std::size_t ZPoly::degree() const {
  require(!is_zero(), Errc::zero_polynomial, "degree of the zero polynomial");
  return c_.size() - 1;
}

const Integer& ZPoly::leading_coeff() const {
  require(!is_zero(), Errc::zero_polynomial, "leading coefficient of the zero polynomial");
  return c_.back();
}

bool ZPoly::is_monic() const { return !is_zero() && c_.back().is_one(); }

Integer ZPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : Integer(0);
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()), Integer(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return ZPoly::from_coeffs(std::move(out));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly ZPoly::operator-() const {
  ZPoly out = *this;
  for (Integer& c : out.c_) c = -c;
  return out;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return ZPoly::from_coeffs(std::move(out));
}

ZPoly ZPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : ZPoly();
  std::vector<Integer> out(c_.size() + k, Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
  return from_coeffs(std::move(out));
}

ZPoly ZPoly::scaled(const Integer& c) const {
  ZPoly out = *this;
  for (Integer& x : out.c_) x *= c;
  out.trim();
  return out;
}

std::string ZPoly::str(const std::string& var) const {
  ContextPtr ctx = make_context(FieldSpec::rationals(), {var}, MonomialOrdering::lex());
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Monomial m(1);
    m[0] = uint32_t(i);
    terms.push_back({FieldElement::from_integer(ctx->field, c_[i]), m});
  }
  return format_poly(Polynomial::from_terms(ctx, std::move(terms)));
}

ZPoly ZPoly::parse(std::string_view text, const std::string& var) {
  ContextPtr ctx = make_context(FieldSpec::rationals(), {var}, MonomialOrdering::lex());
  Polynomial p = parse_poly(text, ctx);
  std::vector<Integer> coeffs;
  for (const Term& t : p.terms()) {
    const Rational& q = t.coeff.rational();
    require(q.is_integer(), Errc::coefficient_not_in_field,
            "coefficient " + q.str() + " is not an integer");
    std::size_t d = t.mon[0];
    if (coeffs.size() < d + 1) coeffs.resize(d + 1, Integer(0));
    coeffs[d] = q.num();
  }
  return from_coeffs(std::move(coeffs));
}

namespace {

// Working element: polynomial plus the cofactors expressing it over the
// original generators.
struct Item {
  ZPoly p;
  std::vector<ZPoly> cof;
};

Item combine(const Item& a, const ZPoly& fa, const Item& b, const ZPoly& fb) {
  Item out;
  out.p = a.p * fa + b.p * fb;
  out.cof.resize(a.cof.size());
  for (std::size_t j = 0; j < a.cof.size(); ++j) {
    out.cof[j] = a.cof[j] * fa + b.cof[j] * fb;
  }
  return out;
}

void item_submul(Item& w, const Integer& q, std::size_t shift, const Item& g) {
  ZPoly f = ZPoly::monomial(q, shift);
  w.p = w.p - g.p * f;
  for (std::size_t j = 0; j < w.cof.size(); ++j) w.cof[j] = w.cof[j] - g.cof[j] * f;
}

// Full strong reduction: after it, every coefficient c at degree d
// satisfies 0 <= c < lc(g) for all basis elements g of degree <= d.
void reduce_item(Item& w, const std::vector<Item>& basis) {
  if (w.p.is_zero()) return;
  for (std::size_t d = w.p.degree() + 1; d-- > 0;) {
    bool progress = true;
    while (progress) {
      progress = false;
      Integer c = w.p.coeff(d);
      if (c.is_zero()) break;
      for (const Item& g : basis) {
        std::size_t dg = g.p.degree();
        if (dg > d) continue;
        Integer q, r;
        Integer::divmod_floor(c, g.p.leading_coeff(), q, r);
        if (q.is_zero()) continue;
        item_submul(w, q, d - dg, g);
        progress = true;
        break;
      }
    }
    if (w.p.is_zero()) return;
  }
}

void normalize_sign(Item& w) {
  if (!w.p.is_zero() && w.p.leading_coeff().is_negative()) {
    w.p = -w.p;
    for (ZPoly& c : w.cof) c = -c;
  }
}

void verify_transform(const Item& w, const std::vector<ZPoly>& input) {
  ZPoly acc;
  for (std::size_t j = 0; j < input.size(); ++j) acc = acc + w.cof[j] * input[j];
  invariant(acc == w.p, "standard-basis transformation row does not verify");
}

int cmp_zpoly(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return int(!b.is_zero()) - int(!a.is_zero());
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.degree() + 1; i-- > 0;) {
    int c = Integer::cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

StandardBasis strong_groebner(const std::vector<ZPoly>& gens) {
  StandardBasis out;
  out.input = gens;
  std::vector<Item> basis;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero()) continue;
    Item it;
    it.p = gens[j];
    it.cof.assign(gens.size(), ZPoly());
    it.cof[j] = ZPoly::constant(Integer(1));
    normalize_sign(it);
    basis.push_back(std::move(it));
  }

  std::vector<std::pair<std::size_t, std::size_t>> queue;
  auto enqueue_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) queue.push_back({i, j});
  };
  for (std::size_t j = 0; j < basis.size(); ++j) enqueue_with(j);

  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.erase(queue.begin());
    const Integer ci = basis[i].p.leading_coeff();
    const Integer cj = basis[j].p.leading_coeff();
    const std::size_t di = basis[i].p.degree();
    const std::size_t dj = basis[j].p.degree();
    const std::size_t d = std::max(di, dj);

    Integer g = Integer::gcd(ci, cj);
    Integer l = (ci * cj) / g;  // lcm > 0

    // S-polynomial: cancel the leading terms at the lcm.
    Item s = combine(basis[i], ZPoly::monomial(l / ci, d - di), basis[j],
                     ZPoly::monomial(-(l / cj), d - dj));
    reduce_item(s, basis);
    if (!s.p.is_zero()) {
      normalize_sign(s);
      basis.push_back(std::move(s));
      enqueue_with(basis.size() - 1);
    }

    // G-polynomial: realize gcd of the leading coefficients at the top.
    auto bez = locring::extended_gcd(ci, cj);
    Item gp = combine(basis[i], ZPoly::monomial(bez.u, d - di), basis[j],
                      ZPoly::monomial(bez.v, d - dj));
    reduce_item(gp, basis);
    if (!gp.p.is_zero()) {
      normalize_sign(gp);
      basis.push_back(std::move(gp));
      enqueue_with(basis.size() - 1);
    }
  }

  // Interreduce to a canonical basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Item> others;
      others.reserve(basis.size() - 1);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k != i) others.push_back(basis[k]);
      }
      Item r = basis[i];
      reduce_item(r, others);
      if (r.p != basis[i].p) {
        changed = true;
        if (r.p.is_zero()) {
          basis.erase(basis.begin() + long(i));
        } else {
          normalize_sign(r);
          basis[i] = std::move(r);
        }
        break;
      }
    }
  }
  std::sort(basis.begin(), basis.end(),
            [](const Item& a, const Item& b) { return cmp_zpoly(a.p, b.p) < 0; });

  for (const Item& it : basis) {
    verify_transform(it, out.input);
    out.gens.push_back(it.p);
    out.transform.push_back(it.cof);
  }
  return out;
}

ZReduction reduce_with_cofactors(const ZPoly& f, const StandardBasis& basis) {
  ZReduction out;
  out.remainder = f;
  out.cofactors.assign(basis.input.size(), ZPoly());
  if (f.is_zero() || basis.gens.empty()) return out;
  for (std::size_t d = f.degree() + 1; d-- > 0;) {
    bool progress = true;
    while (progress && !out.remainder.is_zero()) {
      progress = false;
      Integer c = out.remainder.coeff(d);
      if (c.is_zero()) break;
      for (std::size_t i = 0; i < basis.gens.size(); ++i) {
        const ZPoly& g = basis.gens[i];
        if (g.degree() > d) continue;
        Integer q, r;
        Integer::divmod_floor(c, g.leading_coeff(), q, r);
        if (q.is_zero()) continue;
        ZPoly factor = ZPoly::monomial(q, d - g.degree());
        out.remainder = out.remainder - g * factor;
        for (std::size_t j = 0; j < basis.input.size(); ++j) {
          out.cofactors[j] = out.cofactors[j] + basis.transform[i][j] * factor;
        }
        progress = true;
        break;
      }
    }
    if (out.remainder.is_zero()) break;
  }
  ZPoly acc = out.remainder;
  for (std::size_t j = 0; j < basis.input.size(); ++j) {
    acc = acc + out.cofactors[j] * basis.input[j];
  }
  invariant(acc == f, "strong reduction bookkeeping does not verify");
  return out;
}

MonicOutcome monic_localization_problem(const std::vector<ZPoly>& gens) {
  MonicOutcome out;
  out.basis = strong_groebner(gens);
  const auto& basis = out.basis.gens;
  if (basis.empty()) {
    out.lc_gcd = Integer(0);
    return out;  // zero ideal meets no monic polynomial
  }

  // Solve sum a_i * lc_i = gcd over Z by folding Bezout identities.
  std::vector<Integer> a{Integer(1)};
  Integer g = basis[0].leading_coeff();
  for (std::size_t i = 1; i < basis.size(); ++i) {
    auto bez = locring::extended_gcd(g, basis[i].leading_coeff());
    for (Integer& c : a) c *= bez.u;
    a.push_back(bez.v);
    g = bez.g;
  }
  out.lc_gcd = g;
  if (!g.is_one()) return out;  // certified: no monic element exists

  std::size_t max_deg = 0;
  for (const ZPoly& b : basis) max_deg = std::max(max_deg, b.degree());

  MonicWitness w;
  w.cofactors.assign(out.basis.input.size(), ZPoly());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    ZPoly shift = ZPoly::monomial(a[i], max_deg - basis[i].degree());
    w.witness = w.witness + basis[i] * shift;
    for (std::size_t j = 0; j < out.basis.input.size(); ++j) {
      w.cofactors[j] = w.cofactors[j] + out.basis.transform[i][j] * shift;
    }
  }
  invariant(w.witness.is_monic(), "monic witness is not monic");
  ZPoly acc;
  for (std::size_t j = 0; j < out.basis.input.size(); ++j) {
    acc = acc + w.cofactors[j] * out.basis.input[j];
  }
  invariant(acc == w.witness, "monic witness cofactors do not verify");
  out.witness = std::move(w);
  return out;
}

}  // namespace locring::zt
