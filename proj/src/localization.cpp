#include "locring/localization.hpp"

#include <chrono>

#include "locring/error.hpp"
#include "locring/poly_io.hpp"

namespace locring {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

SetPtr MultiplicativeSet::prime_complement(const RingPtr& ring,
                                           std::vector<Polynomial> prime_gens) {
  require(ring != nullptr, Errc::ring_mismatch, "null ring");
  auto set = std::shared_ptr<MultiplicativeSet>(new MultiplicativeSet());
  set->kind_ = Kind::prime_complement;
  set->ring_ = ring;
  for (Polynomial& g : prime_gens) {
    Polynomial r = ring->reduce(g);
    if (!r.is_zero()) set->gens_.push_back(std::move(r));
  }
  set->table_ = LiftTable(ring, Matrix::column_vector(ring, set->gens_));
  return set;
}

SetPtr MultiplicativeSet::zariskification(const RingPtr& ring,
                                          std::vector<Polynomial> ideal_gens) {
  require(ring != nullptr, Errc::ring_mismatch, "null ring");
  auto set = std::shared_ptr<MultiplicativeSet>(new MultiplicativeSet());
  set->kind_ = Kind::zariskification;
  set->ring_ = ring;
  for (Polynomial& g : ideal_gens) {
    Polynomial r = ring->reduce(g);
    if (!r.is_zero()) set->gens_.push_back(std::move(r));
  }
  set->table_ = LiftTable(ring, Matrix::column_vector(ring, set->gens_));
  return set;
}

SetPtr MultiplicativeSet::monic_univariate_int() {
  return std::shared_ptr<MultiplicativeSet>(new MultiplicativeSet());
}

std::string MultiplicativeSet::describe() const {
  switch (kind_) {
    case Kind::monic_univariate_int:
      return "monic polynomials in Z[t]";
    case Kind::prime_complement:
    case Kind::zariskification: {
      std::string gens;
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) gens += ", ";
        gens += format_poly(gens_[i]);
      }
      if (kind_ == Kind::prime_complement) {
        return ring_->name() + " minus <" + gens + ">";
      }
      return "1 + <" + gens + "> in " + ring_->name();
    }
  }
  return "?";
}

std::optional<std::vector<Polynomial>> MultiplicativeSet::ideal_membership(
    const Polynomial& f) const {
  require(kind_ != Kind::monic_univariate_int, Errc::set_mismatch,
          "ideal membership query on the monic set");
  Polynomial fr = ring_->reduce(f);
  if (gens_.empty()) {
    if (fr.is_zero()) return std::vector<Polynomial>{};
    return std::nullopt;
  }
  return table_.lift({fr});
}

bool MultiplicativeSet::contains(const Polynomial& s) const {
  switch (kind_) {
    case Kind::prime_complement:
      return !ideal_membership(s).has_value();
    case Kind::zariskification:
      return ideal_membership(s - ring_->one()).has_value();
    case Kind::monic_univariate_int:
      fail(Errc::set_mismatch, "polynomial-ring element tested against the monic set");
  }
  return false;
}

bool MultiplicativeSet::contains(const zt::ZPoly& s) const {
  require(kind_ == Kind::monic_univariate_int, Errc::set_mismatch,
          "Z[t] element tested against a polynomial-ring set");
  return s.is_monic();
}

bool s_contains(const SetPtr& set, const Polynomial& s) {
  require(set != nullptr, Errc::set_mismatch, "null multiplicative set");
  return set->contains(s);
}

bool s_contains(const SetPtr& set, const zt::ZPoly& s) {
  require(set != nullptr, Errc::set_mismatch, "null multiplicative set");
  return set->contains(s);
}

LocalizationResult localization_problem(const SetPtr& set, const IdealSpec& ideal) {
  require(set != nullptr, Errc::set_mismatch, "null multiplicative set");
  require(set->kind() != MultiplicativeSet::Kind::monic_univariate_int, Errc::set_mismatch,
          "use zt::monic_localization_problem for the monic set");
  const RingPtr& ring = set->ring();
  require(same_ring(ring, ideal.ring), Errc::ring_mismatch,
          "ideal over a different ring than the multiplicative set");
  LocalizationResult out;

  if (set->kind() == MultiplicativeSet::Kind::prime_complement) {
    // I meets R \ p iff some generator escapes p; take the first one.
    for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
      auto proof = set->ideal_membership(ideal.gens[i]);
      if (!proof) {
        LocalizationWitness w;
        w.cofactors.assign(ideal.gens.size(), ring->zero());
        w.cofactors[i] = ring->one();
        w.element = ideal.gens[i];
        out.witness = std::move(w);
        return out;
      }
      out.prime_membership_proofs.push_back(std::move(*proof));
    }
    out.refusal_note = "every generator lies in the prime ideal";
    return out;
  }

  // Zariskification: 1 = sum r_i h_i + sum a_i f_i solvable over R iff
  // the ideal meets 1 + <h_1,...,h_m>.
  std::vector<Polynomial> column = set->generators();
  column.insert(column.end(), ideal.gens.begin(), ideal.gens.end());
  LiftTable table(ring, Matrix::column_vector(ring, column));
  std::vector<Polynomial> nf;
  auto sol = table.lift({ring->one()}, &nf);
  if (!sol) {
    out.refusal_normal_form = std::move(nf);
    out.refusal_note = "1 has no representation over (L | I)";
    return out;
  }
  LocalizationWitness w;
  w.cofactors.assign(sol->begin() + long(set->generators().size()), sol->end());
  Polynomial elem = ring->zero();
  for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
    elem += w.cofactors[i] * ideal.gens[i];
  }
  w.element = ring->reduce(elem);
  invariant(set->contains(w.element), "zariskification witness escaped 1 + L");
  out.witness = std::move(w);
  return out;
}

IdealSpec DomResult::ideal() const {
  std::vector<Polynomial> rs;
  rs.reserve(gens.size());
  for (const DomGenerator& g : gens) rs.push_back(g.r);
  return IdealSpec::make(ring, rs);
}

DomResult dom_with_cofactors(const RingPtr& ring, const Matrix& a, const Matrix& b) {
  require(b.rows() == 1, Errc::dimension_mismatch, "dom expects a single row b");
  require(a.cols() == b.cols(), Errc::dimension_mismatch, "dom shape mismatch");
  DomResult out;
  out.ring = ring;
  out.A = a;
  out.b = b;
  SyzygyResult syz = ring_syzygies(ring, b.vstack(a));
  for (std::size_t i = 0; i < syz.L.rows(); ++i) {
    DomGenerator gen;
    gen.r = syz.L.at(i, 0);
    for (std::size_t k = 0; k < a.rows(); ++k) gen.lift.push_back(syz.L.at(i, k + 1));
    // Certificate r*b + lift*A = 0 in R, re-checked generator by generator.
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Polynomial acc = gen.r * b.at(0, j);
      for (std::size_t k = 0; k < a.rows(); ++k) acc += gen.lift[k] * a.at(k, j);
      invariant(ring_is_zero(ring, acc), "dom generator certificate failed");
    }
    out.gens.push_back(std::move(gen));
  }
  return out;
}

LocMatrix::LocMatrix(Matrix num, Polynomial den, SetPtr set)
    : num_(std::move(num)), den_(std::move(den)), set_(std::move(set)) {
  require(set_ != nullptr, Errc::set_mismatch, "LocMatrix without a multiplicative set");
  require(same_ring(num_.ring(), set_->ring()), Errc::ring_mismatch,
          "LocMatrix numerator over a different ring");
  den_ = num_.ring()->reduce(den_);
  require(set_->contains(den_), Errc::set_mismatch,
          "denominator " + format_poly(den_) + " is not a member of S");
}

LocLiftRowOutcome loc_lift_row(const RingPtr& ring, const SetPtr& set, const Matrix& a,
                               const Matrix& b, PhaseTimings* timings) {
  LocLiftRowOutcome out;
  auto t0 = Clock::now();
  out.dom = dom_with_cofactors(ring, a, b);
  if (timings) timings->syzygy_ms += ms_since(t0);

  auto t1 = Clock::now();
  out.loc = localization_problem(set, out.dom.ideal());
  if (timings) timings->locprob_ms += ms_since(t1);
  if (!out.loc.witness) return out;

  const auto& w = *out.loc.witness;
  std::vector<Polynomial> num(a.rows(), ring->zero());
  for (std::size_t i = 0; i < out.dom.gens.size(); ++i) {
    if (w.cofactors[i].is_zero()) continue;
    for (std::size_t k = 0; k < a.rows(); ++k) {
      num[k] -= w.cofactors[i] * out.dom.gens[i].lift[k];
    }
  }
  Matrix num_row = Matrix::row_vector(ring, num);
  // x*A = den*b holds exactly in R by the dom certificates.
  invariant(num_row * a == b.scaled(w.element), "localized lift residual is nonzero");
  out.solution = LocMatrix(num_row, w.element, set);
  return out;
}

std::optional<LocMatrix> loc_lift(const RingPtr& ring, const SetPtr& set,
                                  const LocMatrix& a, const LocMatrix& b,
                                  PhaseTimings* timings) {
  require(same_ring(ring, a.num().ring()) && same_ring(ring, b.num().ring()),
          Errc::ring_mismatch, "loc_lift arguments over different rings");
  require(a.cols() == b.cols(), Errc::dimension_mismatch, "loc_lift width mismatch");
  const std::size_t q = b.rows(), m = a.rows();

  std::vector<std::vector<Polynomial>> rows;
  std::vector<Polynomial> dens;
  for (std::size_t i = 0; i < q; ++i) {
    LocLiftRowOutcome row = loc_lift_row(ring, set, a.num(),
                                         Matrix::row_vector(ring, b.num().row(i)), timings);
    if (!row.solution) return std::nullopt;
    rows.push_back(row.solution->num().row(0));
    dens.push_back(row.solution->den());
  }

  // Common denominator d_B * prod(e_i); row i scaled by the complements.
  Polynomial den = b.den();
  for (const Polynomial& e : dens) den = ring->reduce(den * e);
  Matrix num = Matrix::zero(ring, q, m);
  for (std::size_t i = 0; i < q; ++i) {
    Polynomial scale = a.den();
    for (std::size_t j = 0; j < q; ++j) {
      if (j != i) scale = ring->reduce(scale * dens[j]);
    }
    for (std::size_t k = 0; k < m; ++k) {
      num.set(i, k, rows[i][k] * scale);
    }
  }
  LocMatrix x(num, den, set);

  // Residual check in S^-1 R: every entry of X*A - B must vanish.
  Matrix resid = (x.num() * a.num()).scaled(b.den()) - b.num().scaled(den * a.den());
  for (std::size_t i = 0; i < resid.rows(); ++i) {
    for (std::size_t j = 0; j < resid.cols(); ++j) {
      invariant(loc_is_zero(ring, set, resid.at(i, j)),
                "loc_lift residual entry is nonzero in the localization");
    }
  }
  return x;
}

LocMatrix loc_syzygies(const RingPtr& ring, const SetPtr& set, const LocMatrix& a) {
  SyzygyResult syz = ring_syzygies(ring, a.num());
  return LocMatrix(syz.L, ring->one(), set);
}

LocMatrix loc_weak_lift(const RingPtr& ring, const SetPtr& set, const LocMatrix& t,
                        const Matrix& a, const SyzygyResult& syz) {
  require(same_ring(ring, a.ring()), Errc::ring_mismatch, "weak lift ring mismatch");
  require(t.cols() == a.rows(), Errc::dimension_mismatch, "weak lift shape mismatch");
  Matrix residual = t.num() * a;  // p x n over R

  Polynomial s = ring->one();
  if (!residual.is_zero()) {
    // Flatten the residual and intersect its annihilator with S.
    std::vector<Polynomial> flat;
    flat.reserve(residual.rows() * residual.cols());
    for (std::size_t i = 0; i < residual.rows(); ++i) {
      for (std::size_t j = 0; j < residual.cols(); ++j) flat.push_back(residual.at(i, j));
    }
    IdealSpec ann = ring_annihilator(ring, Matrix::row_vector(ring, flat));
    LocalizationResult loc = localization_problem(set, ann);
    if (!loc.witness) {
      fail(Errc::not_a_localized_syzygy,
           "T*(A/1) is nonzero in the localization: no s in S annihilates the residual");
    }
    s = loc.witness->element;
  }

  Matrix st = t.num().scaled(s);
  Matrix u = lift_of_syzygies(ring, syz, st);  // U*L = s*T exactly in R
  return LocMatrix(u, ring->reduce(t.den() * s), set);
}

bool loc_is_zero(const RingPtr& ring, const SetPtr& set, const Polynomial& f) {
  Polynomial fr = ring->reduce(f);
  if (fr.is_zero()) return true;
  IdealSpec ann = ring_annihilator(ring, Matrix::row_vector(ring, {fr}));
  return localization_problem(set, ann).witness.has_value();
}

std::optional<LocMatrix> bl_lift_maximal(const RingPtr& ring, const SetPtr& maximal_set,
                                         const Matrix& a, const Matrix& b,
                                         PhaseTimings* timings) {
  require(maximal_set->kind() == MultiplicativeSet::Kind::prime_complement,
          Errc::set_mismatch, "bl_lift_maximal expects a prime-complement set");
  require(b.rows() == 1 && a.cols() == b.cols(), Errc::dimension_mismatch,
          "bl_lift_maximal expects a single row b");
  const auto& mgens = maximal_set->generators();

  // Stack A over (m_1,...,m_l)^tr * b and solve X*stack + b = 0 over R.
  Matrix outer = Matrix::zero(ring, mgens.size(), a.cols());
  for (std::size_t k = 0; k < mgens.size(); ++k) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      outer.set(k, j, mgens[k] * b.at(0, j));
    }
  }
  auto t0 = Clock::now();
  std::optional<Matrix> y = ring_lift(ring, a.vstack(outer), -b);
  if (timings) timings->syzygy_ms += ms_since(t0);
  if (!y) return std::nullopt;

  std::vector<Polynomial> x1(a.rows(), ring->zero());
  for (std::size_t k = 0; k < a.rows(); ++k) x1[k] = -y->at(0, k);
  Polynomial u = ring->one();
  for (std::size_t k = 0; k < mgens.size(); ++k) {
    u += y->at(0, a.rows() + k) * mgens[k];
  }
  u = ring->reduce(u);

  Matrix num = Matrix::row_vector(ring, x1);
  // Recovery formula certified by substitution: (-X1)*A = u*b in R.
  invariant(num * a == b.scaled(u), "bl_lift_maximal residual is nonzero");
  return LocMatrix(num, u, maximal_set);
}

}  // namespace locring
