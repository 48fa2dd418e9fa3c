#include "locring/module.hpp"

#include "locring/error.hpp"

namespace locring {

ModuleElement ModuleElement::zero(const ContextPtr& ctx, std::size_t width) {
  std::vector<Polynomial> comps(width, Polynomial(ctx));
  return ModuleElement(std::move(comps));
}

ModuleElement::ModuleElement(std::vector<Polynomial> comps) : comps_(std::move(comps)) {
  // Width 0 is legal (matrices with zero rows/columns occur throughout).
  for (const Polynomial& p : comps_) {
    require(!p.is_null(), Errc::ring_mismatch, "null component");
    require(same_context(p.context(), comps_[0].context()), Errc::ring_mismatch,
            "module components over different rings");
  }
}

const ContextPtr& ModuleElement::context() const { return comps_.at(0).context(); }

bool ModuleElement::is_zero() const {
  for (const Polynomial& p : comps_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

std::optional<ModuleElement::Lead> ModuleElement::lead(const ModuleOrdering& ord) const {
  require(ord.width() == width(), Errc::length_mismatch, "module ordering width mismatch");
  std::optional<Lead> best;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    const Term& t = comps_[i].leading_term();
    if (!best ||
        cmp_module_terms(t.mon, i, best->mon, best->comp, ord) == Cmp::greater) {
      best = Lead{i, t.mon, t.coeff};
    }
  }
  return best;
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
  require(a.width() == b.width(), Errc::length_mismatch, "module width mismatch");
  std::vector<Polynomial> comps;
  comps.reserve(a.width());
  for (std::size_t i = 0; i < a.width(); ++i) comps.push_back(a.comps_[i] + b.comps_[i]);
  return ModuleElement(std::move(comps));
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
  return a + (-b);
}

ModuleElement ModuleElement::operator-() const {
  std::vector<Polynomial> comps;
  comps.reserve(width());
  for (const Polynomial& p : comps_) comps.push_back(-p);
  return ModuleElement(std::move(comps));
}

ModuleElement ModuleElement::times_term(const FieldElement& c, const Monomial& m) const {
  std::vector<Polynomial> comps;
  comps.reserve(width());
  for (const Polynomial& p : comps_) comps.push_back(p.times_term(c, m));
  return ModuleElement(std::move(comps));
}

ModuleElement ModuleElement::scaled(const FieldElement& c) const {
  return times_term(c, Monomial(context()->nvars()));
}

ModuleElement ModuleElement::monic(const ModuleOrdering& ord) const {
  auto l = lead(ord);
  if (!l) return *this;
  return scaled(l->coeff.inverse());
}

ModuleElement ModuleElement::drop_lead_of(std::size_t comp) const {
  ModuleElement out = *this;
  out.comps_[comp] = out.comps_[comp].without_leading_term();
  return out;
}

bool ModuleElement::single_component() const {
  std::size_t nonzero = 0;
  for (const Polynomial& p : comps_) {
    if (!p.is_zero()) ++nonzero;
  }
  return nonzero <= 1;
}

ModuleElement ModuleElement::slice(std::size_t lo, std::size_t hi) const {
  require(lo <= hi && hi <= width(), Errc::dimension_mismatch, "bad module slice");
  std::vector<Polynomial> comps(comps_.begin() + lo, comps_.begin() + hi);
  return ModuleElement(std::move(comps));
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  if (a.width() != b.width()) return false;
  for (std::size_t i = 0; i < a.width(); ++i) {
    if (a.comps_[i] != b.comps_[i]) return false;
  }
  return true;
}

}  // namespace locring
