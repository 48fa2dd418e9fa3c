#ifndef LOCRING_RING_HPP
#define LOCRING_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locring/groebner.hpp"

namespace locring {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A computable ring in the supported shapes: k[x_1,...,x_n] or
// k[x_1,...,x_n]/I. Quotient rings carry a reduced Groebner basis of I,
// computed once at construction; elements are represented by normal-form
// representatives in the base ring. Immutable after construction.
class Ring : public std::enable_shared_from_this<Ring> {
public:
  static RingPtr polynomial_ring(FieldSpec field, std::vector<std::string> vars,
                                 MonomialOrdering ord);
  static RingPtr quotient_ring(const RingPtr& base, std::vector<Polynomial> ideal_gens);

  const ContextPtr& context() const { return ctx_; }
  bool is_quotient() const { return quotient_; }
  const std::vector<Polynomial>& quotient_generators() const { return quot_gens_; }
  const std::vector<Polynomial>& quotient_gb() const { return quot_gb_; }

  // Normal form modulo the quotient ideal (identity on plain rings).
  Polynomial reduce(const Polynomial& f) const;
  // Membership of f in the quotient ideal with explicit cofactors.
  std::optional<std::vector<Polynomial>> ideal_cofactors(const Polynomial& f) const;

  Polynomial parse(std::string_view text) const;  // reduced representative
  Polynomial zero() const { return Polynomial(ctx_); }
  Polynomial one() const { return Polynomial::constant_int(ctx_, 1); }
  std::string name() const;

private:
  Ring() = default;
  ContextPtr ctx_;
  bool quotient_ = false;
  std::vector<Polynomial> quot_gens_;
  std::vector<Polynomial> quot_gb_;        // reduced, head-monic
  std::vector<ModuleElement> quot_gb_elems_;  // width-1 view of quot_gb_
  ModuleOrdering width1_ord_;
  engine::AugmentedGB ideal_aug_;          // lift data for ideal membership
};

bool same_ring(const RingPtr& a, const RingPtr& b);

// Dense matrix over a ring; entries are stored as reduced representatives.
class Matrix {
public:
  Matrix() = default;
  static Matrix zero(const RingPtr& ring, std::size_t rows, std::size_t cols);
  static Matrix identity(const RingPtr& ring, std::size_t n);
  static Matrix from_rows(const RingPtr& ring,
                          const std::vector<std::vector<Polynomial>>& rows);
  static Matrix from_strings(const RingPtr& ring,
                             const std::vector<std::vector<std::string>>& rows);
  static Matrix row_vector(const RingPtr& ring, const std::vector<Polynomial>& row);
  static Matrix column_vector(const RingPtr& ring, const std::vector<Polynomial>& col);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Polynomial& p);  // reduces
  std::vector<Polynomial> row(std::size_t r) const;
  std::vector<std::vector<Polynomial>> to_rows() const;
  bool is_zero() const;
  Matrix vstack(const Matrix& below) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix operator-() const;
  Matrix scaled(const Polynomial& c) const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> e_;  // row-major
};

// Finitely generated ideal, generators stored reduced.
struct IdealSpec {
  RingPtr ring;
  std::vector<Polynomial> gens;

  static IdealSpec make(const RingPtr& ring, std::vector<Polynomial> gens);
  std::size_t size() const { return gens.size(); }
};

// Reusable lift data for a fixed matrix A over a ring (quotient relation
// rows are stacked automatically). Solves x * A = b for rows b.
class LiftTable {
public:
  LiftTable() = default;
  LiftTable(RingPtr ring, Matrix a);

  const Matrix& source() const { return a_; }
  std::size_t user_rows() const { return m_; }

  // x has m_ entries (relation cofactors are dropped); nullopt when b is
  // not in the row space, in which case *nf_left (if given) receives the
  // nonzero left block of the normal form as the refusal certificate.
  std::optional<std::vector<Polynomial>> lift(
      const std::vector<Polynomial>& b, std::vector<Polynomial>* nf_left = nullptr) const;

private:
  RingPtr ring_;
  Matrix a_;
  std::size_t m_ = 0;
  engine::AugmentedGB aug_;
};

// Universal row syzygies of A over R together with the retained Groebner
// data that turns the special lifting problem into a reduction.
struct SyzygyResult {
  RingPtr ring;
  Matrix A;           // m x n
  Matrix L;           // o x m, L*A = 0 in R, universal
  std::size_t stack_extra = 0;  // appended quotient relation rows
  engine::AugmentedGB aug;      // over the base context, stacked matrix
};

SyzygyResult ring_syzygies(const RingPtr& ring, const Matrix& a);
std::optional<Matrix> ring_lift(const RingPtr& ring, const Matrix& a, const Matrix& b);
bool ring_is_zero(const RingPtr& ring, const Polynomial& f);
IdealSpec ring_annihilator(const RingPtr& ring, const Matrix& v /* 1 x n */);
std::optional<std::vector<Polynomial>> ring_membership(const RingPtr& ring,
                                                       const Polynomial& f,
                                                       const IdealSpec& ideal);

// Special lifting problem: factor T (p x m, rows syzygies of A over R)
// through L as U*L = T. Throws not_a_syzygy when some row of T is not a
// syzygy of A in R.
Matrix lift_of_syzygies(const RingPtr& ring, const SyzygyResult& syz, const Matrix& t);

}  // namespace locring

#endif
