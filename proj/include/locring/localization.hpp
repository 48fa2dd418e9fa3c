#ifndef LOCRING_LOCALIZATION_HPP
#define LOCRING_LOCALIZATION_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locring/ring.hpp"
#include "locring/zt.hpp"

namespace locring {

class MultiplicativeSet;
using SetPtr = std::shared_ptr<const MultiplicativeSet>;

// Symbolic multiplicatively closed subset S of a ring, in the three
// supported families. Membership in S is decidable; the Groebner data
// needed by the membership tests is computed once here and cached, so
// solving many systems over the same localization shares the
// preprocessing.
//
// prime_complement(p): S = R \ p. Primality of p is a documented
// precondition and is never checked; a non-prime p yields meaningless
// verdicts.
class MultiplicativeSet {
public:
  enum class Kind { prime_complement, zariskification, monic_univariate_int };

  static SetPtr prime_complement(const RingPtr& ring, std::vector<Polynomial> prime_gens);
  static SetPtr zariskification(const RingPtr& ring, std::vector<Polynomial> ideal_gens);
  static SetPtr monic_univariate_int();

  Kind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }  // null for the monic family
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::string describe() const;

  // Membership s in S for the ring-based families (set_mismatch for monic).
  bool contains(const Polynomial& s) const;
  // Membership for the monic family over Z[t].
  bool contains(const zt::ZPoly& s) const;

  // Cofactor proof of f in <generators> (the ideal p resp. L), nullopt
  // when f is outside. Uses the cached lift table.
  std::optional<std::vector<Polynomial>> ideal_membership(const Polynomial& f) const;

private:
  MultiplicativeSet() = default;
  Kind kind_ = Kind::monic_univariate_int;
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  LiftTable table_;  // lift data for the generator column
};

bool s_contains(const SetPtr& set, const Polynomial& s);
bool s_contains(const SetPtr& set, const zt::ZPoly& s);

// Outcome of the localization problem for an ideal I = <f_1,...,f_l>:
// either cofactors a with sum a_i f_i in S, or refusal evidence.
struct LocalizationWitness {
  std::vector<Polynomial> cofactors;
  Polynomial element;  // sum a_i f_i, certified member of S
};

struct LocalizationResult {
  std::optional<LocalizationWitness> witness;
  // Prime complement refusal: membership proof of every generator in p.
  std::vector<std::vector<Polynomial>> prime_membership_proofs;
  // Zariskification refusal: nonzero normal form of 1 against the
  // combined column (h_1..h_m, f_1..f_l).
  std::vector<Polynomial> refusal_normal_form;
  std::string refusal_note;
};

LocalizationResult localization_problem(const SetPtr& set, const IdealSpec& ideal);

// One generator of dom_R([b]_A) together with its lift row:
// r*b + lift*A = 0 exactly in R (re-verified on construction).
struct DomGenerator {
  Polynomial r;
  std::vector<Polynomial> lift;  // 1 x m
};

struct DomResult {
  RingPtr ring;
  Matrix A;  // m x n
  Matrix b;  // 1 x n
  std::vector<DomGenerator> gens;
  IdealSpec ideal() const;  // <r_1,...,r_o>, order preserved
};

// dom_R([b]_A) = { r : exists x with x*A = r*b }, generated by the first
// column of the row syzygies of [b; A]; the remaining columns are the
// lift rows the solver reuses.
DomResult dom_with_cofactors(const RingPtr& ring, const Matrix& a, const Matrix& b);

// Matrix over the localization S^-1 R: numerator over R and a single
// common denominator whose S-membership is re-verified on construction.
class LocMatrix {
public:
  LocMatrix() = default;
  LocMatrix(Matrix num, Polynomial den, SetPtr set);

  const Matrix& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const SetPtr& set() const { return set_; }
  std::size_t rows() const { return num_.rows(); }
  std::size_t cols() const { return num_.cols(); }

private:
  Matrix num_;
  Polynomial den_;
  SetPtr set_;
};

struct PhaseTimings {
  double gb_ms = 0;       // Groebner preprocessing (set construction)
  double syzygy_ms = 0;   // syzygy computations
  double locprob_ms = 0;  // localization-problem decisions
};

// Row solver over S^-1 R: x * (A/1) = b/1. On success the solution is
// x = (-sum a_i L_i) / (sum a_i r_i); the numerator carries the sign so
// the denominator is the certified S-member.
struct LocLiftRowOutcome {
  std::optional<LocMatrix> solution;  // 1 x m
  DomResult dom;
  LocalizationResult loc;
};

LocLiftRowOutcome loc_lift_row(const RingPtr& ring, const SetPtr& set, const Matrix& a,
                               const Matrix& b, PhaseTimings* timings = nullptr);

// General lifting problem over S^-1 R, rows solved independently and
// assembled over the product denominator. Every emitted solution passes
// an entrywise loc_is_zero residual check.
std::optional<LocMatrix> loc_lift(const RingPtr& ring, const SetPtr& set,
                                  const LocMatrix& a, const LocMatrix& b,
                                  PhaseTimings* timings = nullptr);

// Syzygies over the localization: L/1 for L the syzygies of the numerator.
LocMatrix loc_syzygies(const RingPtr& ring, const SetPtr& set, const LocMatrix& a);

// Weak kernel lift: given T/d' with (T/d')*(A/1) = 0 over S^-1 R, find
// U/(d' s) with (U/(d' s))*(L/1) = T/d'. The s with s*T*A = 0 is found by
// the localization problem on the annihilator of the residual entries.
// Throws not_a_localized_syzygy when no such s exists.
LocMatrix loc_weak_lift(const RingPtr& ring, const SetPtr& set, const LocMatrix& t,
                        const Matrix& a, const SyzygyResult& syz);

// f/1 = 0 in S^-1 R, i.e. the annihilator of f meets S.
bool loc_is_zero(const RingPtr& ring, const SetPtr& set, const Polynomial& f);

// Alternative solver for localizations at a maximal ideal: solve
// X*(A stacked over m^tr*b) + b = 0 over R and read the denominator off
// the m-block of the solution. The set must be the prime complement of
// the (maximal) ideal.
std::optional<LocMatrix> bl_lift_maximal(const RingPtr& ring, const SetPtr& maximal_set,
                                         const Matrix& a, const Matrix& b,
                                         PhaseTimings* timings = nullptr);

}  // namespace locring

#endif
