#include "locring/ring.hpp"

#include "locring/error.hpp"
#include "locring/poly_io.hpp"

namespace locring {

namespace {

// A's rows over the base context followed by one relation row f*e_j per
// (quotient generator f, column j). The stacked syzygies present the
// coherence of the quotient ring constructively.
std::vector<std::vector<Polynomial>> stacked_rows(const RingPtr& ring, const Matrix& a) {
  std::vector<std::vector<Polynomial>> rows = a.to_rows();
  if (ring->is_quotient()) {
    const ContextPtr& ctx = ring->context();
    for (const Polynomial& f : ring->quotient_generators()) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        std::vector<Polynomial> rel(a.cols(), Polynomial(ctx));
        rel[j] = f;
        rows.push_back(std::move(rel));
      }
    }
  }
  return rows;
}

}  // namespace

RingPtr Ring::polynomial_ring(FieldSpec field, std::vector<std::string> vars,
                              MonomialOrdering ord) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      require(vars[i] != vars[j], Errc::bad_problem_file,
              "duplicate variable name '" + vars[i] + "'");
    }
  }
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->ctx_ = make_context(field, std::move(vars), ord);
  return ring;
}

RingPtr Ring::quotient_ring(const RingPtr& base, std::vector<Polynomial> ideal_gens) {
  require(base && !base->is_quotient(), Errc::unsupported,
          "quotient base must be a plain polynomial ring");
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->ctx_ = base->ctx_;
  ring->quotient_ = true;
  ring->width1_ord_ = ModuleOrdering::flat(ring->ctx_->ord, 1);
  for (Polynomial& f : ideal_gens) {
    require(same_context(f.context(), ring->ctx_), Errc::ring_mismatch,
            "ideal generator from a different ring");
    if (!f.is_zero()) ring->quot_gens_.push_back(f);
  }
  std::vector<ModuleElement> gens1;
  for (const Polynomial& f : ring->quot_gens_) gens1.push_back(ModuleElement({f}));
  ring->quot_gb_elems_ = engine::buchberger(gens1, ring->width1_ord_);
  for (const ModuleElement& g : ring->quot_gb_elems_) ring->quot_gb_.push_back(g.comp(0));

  std::vector<std::vector<Polynomial>> column;
  for (const Polynomial& f : ring->quot_gens_) column.push_back({f});
  ring->ideal_aug_ =
      engine::syzygies_of_rows(ring->ctx_, column, ring->ctx_->ord, /*lift_only=*/true);
  return ring;
}

Polynomial Ring::reduce(const Polynomial& f) const {
  require(same_context(f.context(), ctx_), Errc::ring_mismatch,
          "element from a different ring");
  if (!quotient_ || f.is_zero() || quot_gb_elems_.empty()) return f;
  return engine::normal_form(ModuleElement({f}), quot_gb_elems_, width1_ord_).comp(0);
}

std::optional<std::vector<Polynomial>> Ring::ideal_cofactors(const Polynomial& f) const {
  require(quotient_, Errc::unsupported, "ideal_cofactors on a plain ring");
  if (quot_gens_.empty()) {
    if (f.is_zero()) return std::vector<Polynomial>{};
    return std::nullopt;
  }
  return engine::lift_row(ideal_aug_, {f}).solution;
}

Polynomial Ring::parse(std::string_view text) const {
  return reduce(parse_poly(text, ctx_));
}

std::string Ring::name() const {
  std::string out = ctx_->name();
  if (quotient_) {
    out += "/<";
    for (std::size_t i = 0; i < quot_gens_.size(); ++i) {
      if (i) out += ", ";
      out += format_poly(quot_gens_[i]);
    }
    out += ">";
  }
  return out;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (!same_context(a->context(), b->context())) return false;
  if (a->is_quotient() != b->is_quotient()) return false;
  if (a->quotient_generators().size() != b->quotient_generators().size()) return false;
  for (std::size_t i = 0; i < a->quotient_generators().size(); ++i) {
    if (a->quotient_generators()[i] != b->quotient_generators()[i]) return false;
  }
  return true;
}

Matrix Matrix::zero(const RingPtr& ring, std::size_t rows, std::size_t cols) {
  Matrix m;
  m.ring_ = ring;
  m.rows_ = rows;
  m.cols_ = cols;
  m.e_.assign(rows * cols, Polynomial(ring->context()));
  return m;
}

Matrix Matrix::identity(const RingPtr& ring, std::size_t n) {
  Matrix m = zero(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = ring->one();
  return m;
}

Matrix Matrix::from_rows(const RingPtr& ring,
                         const std::vector<std::vector<Polynomial>>& rows) {
  Matrix m;
  m.ring_ = ring;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows[0].size();
  for (const auto& row : rows) {
    require(row.size() == m.cols_, Errc::dimension_mismatch, "ragged matrix rows");
    for (const Polynomial& p : row) m.e_.push_back(ring->reduce(p));
  }
  return m;
}

Matrix Matrix::from_strings(const RingPtr& ring,
                            const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial>> parsed;
  parsed.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Polynomial> prow;
    prow.reserve(row.size());
    for (const std::string& s : row) prow.push_back(parse_poly(s, ring->context()));
    parsed.push_back(std::move(prow));
  }
  return from_rows(ring, parsed);
}

Matrix Matrix::row_vector(const RingPtr& ring, const std::vector<Polynomial>& row) {
  return from_rows(ring, {row});
}

Matrix Matrix::column_vector(const RingPtr& ring, const std::vector<Polynomial>& col) {
  std::vector<std::vector<Polynomial>> rows;
  rows.reserve(col.size());
  for (const Polynomial& p : col) rows.push_back({p});
  return from_rows(ring, rows);
}

const Polynomial& Matrix::at(std::size_t r, std::size_t c) const {
  require(r < rows_ && c < cols_, Errc::dimension_mismatch, "matrix index out of range");
  return e_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, const Polynomial& p) {
  require(r < rows_ && c < cols_, Errc::dimension_mismatch, "matrix index out of range");
  e_[r * cols_ + c] = ring_->reduce(p);
}

std::vector<Polynomial> Matrix::row(std::size_t r) const {
  require(r < rows_, Errc::dimension_mismatch, "matrix row out of range");
  return std::vector<Polynomial>(e_.begin() + long(r * cols_),
                                 e_.begin() + long((r + 1) * cols_));
}

std::vector<std::vector<Polynomial>> Matrix::to_rows() const {
  std::vector<std::vector<Polynomial>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

bool Matrix::is_zero() const {
  for (const Polynomial& p : e_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::vstack(const Matrix& below) const {
  require(same_ring(ring_, below.ring_), Errc::ring_mismatch, "vstack over different rings");
  require(cols_ == below.cols_, Errc::dimension_mismatch, "vstack width mismatch");
  Matrix out = *this;
  out.rows_ += below.rows_;
  out.e_.insert(out.e_.end(), below.e_.begin(), below.e_.end());
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(same_ring(a.ring_, b.ring_), Errc::ring_mismatch, "product over different rings");
  require(a.cols_ == b.rows_, Errc::dimension_mismatch, "matrix product shape mismatch");
  Matrix out = Matrix::zero(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial acc(a.ring_->context());
      for (std::size_t k = 0; k < a.cols_; ++k) acc += a.at(i, k) * b.at(k, j);
      out.e_[i * out.cols_ + j] = a.ring_->reduce(acc);
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(same_ring(a.ring_, b.ring_), Errc::ring_mismatch, "sum over different rings");
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, Errc::dimension_mismatch,
          "matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.e_.size(); ++i) {
    out.e_[i] = a.ring_->reduce(a.e_[i] + b.e_[i]);
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (Polynomial& p : out.e_) p = -p;
  return out;
}

Matrix Matrix::scaled(const Polynomial& c) const {
  Matrix out = *this;
  for (Polynomial& p : out.e_) p = ring_->reduce(p * c);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (!same_ring(a.ring_, b.ring_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    if (a.e_[i] != b.e_[i]) return false;
  }
  return true;
}

IdealSpec IdealSpec::make(const RingPtr& ring, std::vector<Polynomial> gens) {
  IdealSpec spec;
  spec.ring = ring;
  for (Polynomial& g : gens) spec.gens.push_back(ring->reduce(g));
  return spec;
}

LiftTable::LiftTable(RingPtr ring, Matrix a) : ring_(std::move(ring)), a_(std::move(a)) {
  m_ = a_.rows();
  // Lifting needs left-block completeness only; the pure syzygy pairs
  // are skipped.
  aug_ = engine::syzygies_of_rows(ring_->context(), stacked_rows(ring_, a_),
                                  ring_->context()->ord, /*lift_only=*/true,
                                  a_.cols());
}

std::optional<std::vector<Polynomial>> LiftTable::lift(
    const std::vector<Polynomial>& b, std::vector<Polynomial>* nf_left) const {
  std::vector<Polynomial> brow;
  brow.reserve(b.size());
  for (const Polynomial& p : b) brow.push_back(ring_->reduce(p));
  engine::LiftRowResult res = engine::lift_row(aug_, brow);
  if (!res.solution) {
    if (nf_left) {
      nf_left->clear();
      for (std::size_t j = 0; j < a_.cols(); ++j) {
        nf_left->push_back(res.normal_form.comp(j));
      }
    }
    return std::nullopt;
  }
  std::vector<Polynomial> x(res.solution->begin(), res.solution->begin() + long(m_));
  for (Polynomial& p : x) p = ring_->reduce(p);
  return x;
}

SyzygyResult ring_syzygies(const RingPtr& ring, const Matrix& a) {
  require(same_ring(ring, a.ring()), Errc::ring_mismatch, "matrix over a different ring");
  SyzygyResult out;
  out.ring = ring;
  out.A = a;
  auto rows = stacked_rows(ring, a);
  out.stack_extra = rows.size() - a.rows();
  out.aug = engine::syzygies_of_rows(ring->context(), rows, ring->context()->ord,
                                     /*lift_only=*/false, a.cols());
  std::vector<std::vector<Polynomial>> lrows;
  for (const ModuleElement& s : out.aug.syz) {
    std::vector<Polynomial> lrow;
    lrow.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) lrow.push_back(s.comp(i));
    lrows.push_back(std::move(lrow));
  }
  out.L = lrows.empty() ? Matrix::zero(ring, 0, a.rows()) : Matrix::from_rows(ring, lrows);
  invariant((out.L * a).is_zero(), "ring syzygies fail L*A = 0 in R");
  return out;
}

std::optional<Matrix> ring_lift(const RingPtr& ring, const Matrix& a, const Matrix& b) {
  require(same_ring(ring, a.ring()) && same_ring(ring, b.ring()), Errc::ring_mismatch,
          "lift arguments over different rings");
  require(a.cols() == b.cols(), Errc::dimension_mismatch, "lift target width mismatch");
  LiftTable table(ring, a);
  std::vector<std::vector<Polynomial>> xrows;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    auto x = table.lift(b.row(i));
    if (!x) return std::nullopt;
    xrows.push_back(std::move(*x));
  }
  Matrix x = b.rows() == 0 ? Matrix::zero(ring, 0, a.rows())
                           : Matrix::from_rows(ring, xrows);
  invariant(x * a == b, "lift fails X*A = B in R");
  return x;
}

bool ring_is_zero(const RingPtr& ring, const Polynomial& f) {
  return ring->reduce(f).is_zero();
}

IdealSpec ring_annihilator(const RingPtr& ring, const Matrix& v) {
  require(v.rows() == 1, Errc::dimension_mismatch, "annihilator expects a single row");
  SyzygyResult syz = ring_syzygies(ring, v);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < syz.L.rows(); ++i) {
    const Polynomial& r = syz.L.at(i, 0);
    if (r.is_zero()) continue;
    bool dup = false;
    for (const Polynomial& g : gens) {
      if (g == r) dup = true;
    }
    if (!dup) gens.push_back(r);
  }
  return IdealSpec::make(ring, gens);
}

std::optional<std::vector<Polynomial>> ring_membership(const RingPtr& ring,
                                                       const Polynomial& f,
                                                       const IdealSpec& ideal) {
  require(same_ring(ring, ideal.ring), Errc::ring_mismatch, "ideal over a different ring");
  Polynomial fr = ring->reduce(f);
  if (ideal.gens.empty()) {
    if (fr.is_zero()) return std::vector<Polynomial>{};
    return std::nullopt;
  }
  LiftTable table(ring, Matrix::column_vector(ring, ideal.gens));
  return table.lift({fr});
}

Matrix lift_of_syzygies(const RingPtr& ring, const SyzygyResult& syz, const Matrix& t) {
  require(same_ring(ring, syz.ring) && same_ring(ring, t.ring()), Errc::ring_mismatch,
          "syzygy lift over different rings");
  require(t.cols() == syz.A.rows(), Errc::dimension_mismatch, "syzygy row width mismatch");
  const ContextPtr& ctx = ring->context();
  const std::size_t m = syz.A.rows(), n = syz.A.cols();
  const std::size_t width = m + syz.stack_extra;
  const std::size_t nquot = ring->is_quotient() ? ring->quotient_generators().size() : 0;

  std::vector<std::vector<Polynomial>> urows;
  for (std::size_t p = 0; p < t.rows(); ++p) {
    std::vector<Polynomial> trow = t.row(p);
    // Residual over the base ring.
    std::vector<Polynomial> residual(n, Polynomial(ctx));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < m; ++k) residual[j] += trow[k] * syz.A.at(k, j);
    }
    std::vector<Polynomial> w = trow;
    w.resize(width, Polynomial(ctx));
    if (!ring->is_quotient()) {
      for (const Polynomial& r : residual) {
        require(r.is_zero(), Errc::not_a_syzygy, "row is not a syzygy of A");
      }
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        auto cof = ring->ideal_cofactors(residual[j]);
        require(cof.has_value(), Errc::not_a_syzygy, "row is not a syzygy of A in R");
        for (std::size_t k = 0; k < nquot; ++k) {
          w[m + k * n + j] -= (*cof)[k];
        }
      }
    }
    if (width == 0) {
      urows.push_back(std::vector<Polynomial>(syz.aug.syz.size(), Polynomial(ctx)));
      continue;
    }
    engine::NormalFormResult nf =
        engine::normal_form_with_cofactors(ModuleElement(w), syz.aug.syz, syz.aug.syz_ord);
    invariant(nf.remainder.is_zero(), "extended syzygy fails to reduce to zero");
    urows.push_back(std::move(nf.cofactors));
  }
  Matrix u = t.rows() == 0 ? Matrix::zero(ring, 0, syz.L.rows())
                           : Matrix::from_rows(ring, urows);
  invariant(u * syz.L == t, "syzygy lift fails U*L = T in R");
  return u;
}

}  // namespace locring
