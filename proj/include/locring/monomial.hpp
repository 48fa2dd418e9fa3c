#ifndef LOCRING_MONOMIAL_HPP
#define LOCRING_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace locring {

enum class Cmp { less = -1, equal = 0, greater = 1 };

// Exponent vector; length is fixed by the ring context.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {}

  std::size_t size() const { return e_.size(); }
  uint32_t operator[](std::size_t i) const { return e_[i]; }
  uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<uint32_t>& exponents() const { return e_; }

  uint64_t total_degree() const;
  bool is_unit() const;  // all exponents zero

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& other) const;  // this | other
  // other / this; requires divisibility.
  Monomial divide_into(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
  std::vector<uint32_t> e_;
};

// Global (well-) monomial orderings only: lex, degrevlex and a
// block-elimination ordering that compares the left variable block first.
// Local orderings are not representable.
struct MonomialOrdering {
  enum class Kind { lex, degrevlex, block };
  Kind kind = Kind::degrevlex;
  std::size_t block_split = 0;           // block only: width of the left block
  Kind block_inner = Kind::degrevlex;    // ordering inside each block

  static MonomialOrdering lex() { return {Kind::lex, 0, Kind::lex}; }
  static MonomialOrdering degrevlex() { return {Kind::degrevlex, 0, Kind::degrevlex}; }
  static MonomialOrdering block_elimination(std::size_t split, Kind inner);

  bool operator==(const MonomialOrdering&) const = default;
  const char* name() const;
};

// Total-order comparison a ? b; throws length_mismatch on unequal sizes.
Cmp cmp_monomials(const Monomial& a, const Monomial& b, const MonomialOrdering& ord);

// Ordering on module terms (monomial, component). Components are split
// into priority groups (lower group index wins); inside a group the rule
// is position-over-term: lower component index first, then the base
// monomial ordering.
struct ModuleOrdering {
  MonomialOrdering base;
  std::vector<std::size_t> group_of;  // component index -> priority group

  std::size_t width() const { return group_of.size(); }

  // All components in one group.
  static ModuleOrdering flat(MonomialOrdering base, std::size_t width);
  // Components [0, left_width) form the high-priority group.
  static ModuleOrdering left_priority(MonomialOrdering base, std::size_t left_width,
                                      std::size_t width);
};

Cmp cmp_module_terms(const Monomial& ma, std::size_t ca, const Monomial& mb,
                     std::size_t cb, const ModuleOrdering& ord);

}  // namespace locring

#endif
