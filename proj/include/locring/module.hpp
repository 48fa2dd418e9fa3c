#ifndef LOCRING_MODULE_HPP
#define LOCRING_MODULE_HPP

#include <optional>
#include <vector>

#include "locring/polynomial.hpp"

namespace locring {

// A row of a free module R^{1 x w}; component i holds a polynomial.
class ModuleElement {
public:
  ModuleElement() = default;
  static ModuleElement zero(const ContextPtr& ctx, std::size_t width);
  explicit ModuleElement(std::vector<Polynomial> comps);

  std::size_t width() const { return comps_.size(); }
  const Polynomial& comp(std::size_t i) const { return comps_[i]; }
  const std::vector<Polynomial>& components() const { return comps_; }
  const ContextPtr& context() const;
  bool is_zero() const;

  // Leading (monomial, component) data under a module ordering.
  struct Lead {
    std::size_t comp;
    Monomial mon;
    FieldElement coeff;
  };
  std::optional<Lead> lead(const ModuleOrdering& ord) const;

  friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
  friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);
  ModuleElement operator-() const;
  ModuleElement times_term(const FieldElement& c, const Monomial& m) const;
  ModuleElement scaled(const FieldElement& c) const;
  ModuleElement monic(const ModuleOrdering& ord) const;

  // Copy with component `comp`'s leading term removed.
  ModuleElement drop_lead_of(std::size_t comp) const;
  // True when every term lives in a single component.
  bool single_component() const;
  // Restriction to components [lo, hi).
  ModuleElement slice(std::size_t lo, std::size_t hi) const;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b);
  friend bool operator!=(const ModuleElement& a, const ModuleElement& b) { return !(a == b); }

private:
  std::vector<Polynomial> comps_;
};

}  // namespace locring

#endif
