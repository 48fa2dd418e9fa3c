#include "locring/monomial.hpp"

#include <algorithm>

#include "locring/error.hpp"

namespace locring {

uint64_t Monomial::total_degree() const {
  uint64_t d = 0;
  for (uint32_t e : e_) d += e;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(e_.begin(), e_.end(), [](uint32_t e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require(a.size() == b.size(), Errc::length_mismatch, "monomial length mismatch");
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  require(size() == other.size(), Errc::length_mismatch, "monomial length mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (e_[i] > other[i]) return false;
  }
  return true;
}

Monomial Monomial::divide_into(const Monomial& other) const {
  require(divides(other), Errc::internal, "non-divisible monomial quotient");
  Monomial out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = other[i] - e_[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  require(a.size() == b.size(), Errc::length_mismatch, "monomial length mismatch");
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  require(a.size() == b.size(), Errc::length_mismatch, "monomial length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

MonomialOrdering MonomialOrdering::block_elimination(std::size_t split, Kind inner) {
  require(inner != Kind::block, Errc::unsupported, "nested block orderings");
  return {Kind::block, split, inner};
}

const char* MonomialOrdering::name() const {
  switch (kind) {
    case Kind::lex: return "lex";
    case Kind::degrevlex: return "degrevlex";
    case Kind::block: return "block";
  }
  return "?";
}

namespace {

// Compare exponent slices [lo, hi).
Cmp cmp_slice(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
              MonomialOrdering::Kind kind) {
  if (kind == MonomialOrdering::Kind::lex) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? Cmp::greater : Cmp::less;
    }
    return Cmp::equal;
  }
  // degrevlex: higher total degree first; tie broken by the last
  // differing exponent, smaller exponent winning.
  uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? Cmp::greater : Cmp::less;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? Cmp::greater : Cmp::less;
  }
  return Cmp::equal;
}

}  // namespace

Cmp cmp_monomials(const Monomial& a, const Monomial& b, const MonomialOrdering& ord) {
  require(a.size() == b.size(), Errc::length_mismatch, "monomial length mismatch");
  switch (ord.kind) {
    case MonomialOrdering::Kind::lex:
      return cmp_slice(a, b, 0, a.size(), MonomialOrdering::Kind::lex);
    case MonomialOrdering::Kind::degrevlex:
      return cmp_slice(a, b, 0, a.size(), MonomialOrdering::Kind::degrevlex);
    case MonomialOrdering::Kind::block: {
      std::size_t split = std::min(ord.block_split, a.size());
      Cmp left = cmp_slice(a, b, 0, split, ord.block_inner);
      if (left != Cmp::equal) return left;
      return cmp_slice(a, b, split, a.size(), ord.block_inner);
    }
  }
  return Cmp::equal;
}

ModuleOrdering ModuleOrdering::flat(MonomialOrdering base, std::size_t width) {
  ModuleOrdering ord;
  ord.base = base;
  ord.group_of.assign(width, 0);
  return ord;
}

ModuleOrdering ModuleOrdering::left_priority(MonomialOrdering base, std::size_t left_width,
                                             std::size_t width) {
  ModuleOrdering ord;
  ord.base = base;
  ord.group_of.assign(width, 1);
  for (std::size_t i = 0; i < left_width && i < width; ++i) ord.group_of[i] = 0;
  return ord;
}

Cmp cmp_module_terms(const Monomial& ma, std::size_t ca, const Monomial& mb,
                     std::size_t cb, const ModuleOrdering& ord) {
  require(ca < ord.width() && cb < ord.width(), Errc::length_mismatch,
          "module component out of range");
  std::size_t ga = ord.group_of[ca], gb = ord.group_of[cb];
  if (ga != gb) return ga < gb ? Cmp::greater : Cmp::less;
  if (ca != cb) return ca < cb ? Cmp::greater : Cmp::less;  // position over term
  return cmp_monomials(ma, mb, ord.base);
}

}  // namespace locring
