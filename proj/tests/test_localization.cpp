#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "locring/error.hpp"
#include "locring/instance_gen.hpp"
#include "locring/localization.hpp"
#include "locring/poly_io.hpp"

using namespace locring;

namespace {

RingPtr QX() {
  return Ring::polynomial_ring(FieldSpec::rationals(), {"x"}, MonomialOrdering::lex());
}

RingPtr QXY() {
  return Ring::polynomial_ring(FieldSpec::rationals(), {"x", "y"},
                               MonomialOrdering::degrevlex());
}

RingPtr QXY_mod_xy() {
  RingPtr base = QXY();
  return Ring::quotient_ring(base, {base->parse("x*y")});
}

}  // namespace

TEST_CASE("s_contains on the pinned examples") {
  RingPtr R = QXY();
  SetPtr at_x = MultiplicativeSet::prime_complement(R, {R->parse("x")});
  CHECK(s_contains(at_x, R->parse("y")));
  CHECK_FALSE(s_contains(at_x, R->parse("x")));
  CHECK_FALSE(s_contains(at_x, R->parse("x^2 + x*y")));
  CHECK(s_contains(at_x, R->parse("1 + x")));

  SetPtr zar = MultiplicativeSet::zariskification(R, {R->parse("x")});
  CHECK(s_contains(zar, R->parse("1 - x")));
  CHECK(s_contains(zar, R->one()));
  CHECK_FALSE(s_contains(zar, R->parse("x")));

  SetPtr monic = MultiplicativeSet::monic_univariate_int();
  CHECK_FALSE(s_contains(monic, zt::ZPoly::parse("2*t + 1")));
  CHECK(s_contains(monic, zt::ZPoly::parse("t + 7")));
  // Kind mixing is an error, not a false.
  CHECK_THROWS_AS((void)s_contains(monic, R->parse("x")), Error);
  CHECK_THROWS_AS((void)s_contains(at_x, zt::ZPoly::parse("t")), Error);
}

TEST_CASE("localization problem on the pinned examples") {
  RingPtr R = QXY();
  SetPtr at_x = MultiplicativeSet::prime_complement(R, {R->parse("x")});
  IdealSpec I1 = IdealSpec::make(R, {R->parse("x^2"), R->parse("y")});
  LocalizationResult r1 = localization_problem(at_x, I1);
  REQUIRE(r1.witness.has_value());
  CHECK(r1.witness->element == R->parse("y"));
  CHECK(r1.witness->cofactors[0].is_zero());
  CHECK(r1.witness->cofactors[1].is_one());

  RingPtr Rx = QX();
  SetPtr at_x1 = MultiplicativeSet::prime_complement(Rx, {Rx->parse("x")});
  LocalizationResult r2 = localization_problem(
      at_x1, IdealSpec::make(Rx, {Rx->parse("x^2"), Rx->parse("x^3")}));
  CHECK_FALSE(r2.witness.has_value());
  CHECK(r2.prime_membership_proofs.size() == 2);

  SetPtr zar = MultiplicativeSet::zariskification(Rx, {Rx->parse("x")});
  LocalizationResult r3 =
      localization_problem(zar, IdealSpec::make(Rx, {Rx->parse("1 - x")}));
  REQUIRE(r3.witness.has_value());
  CHECK(r3.witness->element == Rx->parse("1 - x"));
  CHECK(s_contains(zar, r3.witness->element));
}

TEST_CASE("dom_with_cofactors on the pinned examples") {
  RingPtr R = QX();
  DomResult d1 = dom_with_cofactors(R, Matrix::from_strings(R, {{"x"}}),
                                    Matrix::from_strings(R, {{"1"}}));
  REQUIRE(d1.gens.size() == 1);
  CHECK(d1.gens[0].r == R->parse("x"));
  CHECK(d1.gens[0].lift[0] == R->parse("-1"));

  DomResult d2 = dom_with_cofactors(R, Matrix::from_strings(R, {{"x"}}),
                                    Matrix::from_strings(R, {{"x^2"}}));
  REQUIRE(d2.gens.size() == 1);
  CHECK(d2.gens[0].r.is_one());
  CHECK(d2.gens[0].lift[0] == R->parse("-x"));

  DomResult d3 = dom_with_cofactors(R, Matrix::from_strings(R, {{"x"}}),
                                    Matrix::from_strings(R, {{"0"}}));
  bool has_unit = false;
  for (const DomGenerator& g : d3.gens) {
    if (g.r.is_one()) has_unit = true;
  }
  CHECK(has_unit);
}

TEST_CASE("loc_lift_row on the pinned examples") {
  RingPtr R = QX();
  SetPtr at_x = MultiplicativeSet::prime_complement(R, {R->parse("x")});

  LocLiftRowOutcome r1 = loc_lift_row(R, at_x, Matrix::from_strings(R, {{"1+x"}}),
                                      Matrix::from_strings(R, {{"1"}}));
  REQUIRE(r1.solution.has_value());
  CHECK(r1.solution->den() == R->parse("x + 1"));
  CHECK(r1.solution->num().at(0, 0).is_one());

  LocLiftRowOutcome r2 = loc_lift_row(R, at_x, Matrix::from_strings(R, {{"x"}}),
                                      Matrix::from_strings(R, {{"1"}}));
  CHECK_FALSE(r2.solution.has_value());
  REQUIRE(r2.dom.gens.size() == 1);
  CHECK(r2.dom.gens[0].r == R->parse("x"));
  // Refusal soundness: each dom generator certified inside the prime.
  CHECK(r2.loc.prime_membership_proofs.size() == 1);

  LocLiftRowOutcome r3 = loc_lift_row(R, at_x, Matrix::from_strings(R, {{"x"}}),
                                      Matrix::from_strings(R, {{"x^2"}}));
  REQUIRE(r3.solution.has_value());
  CHECK(r3.solution->den().is_one());
  CHECK(r3.solution->num().at(0, 0) == R->parse("x"));
}

TEST_CASE("loc_lift assembles rows over a common denominator") {
  RingPtr R = QXY();
  SetPtr at_m = MultiplicativeSet::prime_complement(R, {R->parse("x"), R->parse("y")});

  // q = 0: the empty solution.
  LocMatrix a(Matrix::from_strings(R, {{"1+x"}, {"y"}}), R->one(), at_m);
  LocMatrix b0(Matrix::zero(R, 0, 1), R->one(), at_m);
  auto x0 = loc_lift(R, at_m, a, b0);
  REQUIRE(x0.has_value());
  CHECK(x0->rows() == 0);
  CHECK(x0->cols() == 2);

  // B = A: any valid solution accepted (identity works).
  Matrix sq = Matrix::from_strings(R, {{"1+x", "y"}, {"0", "1"}});
  LocMatrix asq(sq, R->one(), at_m);
  auto xid = loc_lift(R, at_m, asq, asq);
  REQUIRE(xid.has_value());

  // 2x1 system: A = [[1+x],[y]], B = [[1]].
  LocMatrix b(Matrix::from_strings(R, {{"1"}}), R->one(), at_m);
  auto x = loc_lift(R, at_m, a, b);
  REQUIRE(x.has_value());
  // Residual vanishes in the localization (already checked inside; the
  // integral-domain case is exact).
  Matrix resid = x->num() * a.num() - b.num().scaled(x->den());
  CHECK(resid.is_zero());
}

TEST_CASE("loc_syzygies on the pinned examples") {
  RingPtr R = QXY();
  SetPtr at_m = MultiplicativeSet::prime_complement(R, {R->parse("x"), R->parse("y")});
  LocMatrix a(Matrix::from_strings(R, {{"x"}, {"y"}}), R->one(), at_m);
  LocMatrix l = loc_syzygies(R, at_m, a);
  REQUIRE(l.rows() == 1);
  CHECK(l.num().at(0, 0) == R->parse("y"));
  CHECK(l.num().at(0, 1) == R->parse("-x"));
  CHECK(l.den().is_one());

  LocMatrix ident(Matrix::identity(R, 2), R->parse("1 + x"), at_m);
  CHECK(loc_syzygies(R, at_m, ident).rows() == 0);

  LocMatrix zero1(Matrix::from_strings(R, {{"0"}}), R->one(), at_m);
  LocMatrix lz = loc_syzygies(R, at_m, zero1);
  REQUIRE(lz.rows() == 1);
  CHECK(lz.num().at(0, 0).is_one());
}

TEST_CASE("loc_weak_lift, including the torsion case") {
  // Domain case: T is an exact syzygy, s = 1.
  RingPtr R = QXY();
  SetPtr at_m = MultiplicativeSet::prime_complement(R, {R->parse("x"), R->parse("y")});
  Matrix a = Matrix::from_strings(R, {{"x"}, {"y"}});
  SyzygyResult syz = ring_syzygies(R, a);
  LocMatrix t(Matrix::from_strings(R, {{"y", "-x"}}), R->one(), at_m);
  LocMatrix u = loc_weak_lift(R, at_m, t, a, syz);
  CHECK(u.num().at(0, 0).is_one());
  CHECK(u.den().is_one());

  // Torsion case: R = Q[x,y]/<xy> at p = <x>, A = [x], T = [x]/1.
  RingPtr Q = QXY_mod_xy();
  SetPtr at_x = MultiplicativeSet::prime_complement(Q, {Q->parse("x")});
  Matrix aq = Matrix::from_strings(Q, {{"x"}});
  SyzygyResult syzq = ring_syzygies(Q, aq);
  LocMatrix tq(Matrix::from_strings(Q, {{"x"}}), Q->one(), at_x);
  CHECK(loc_is_zero(Q, at_x, Q->parse("x")));  // T*(A/1) = x^2/1 = 0 over S^-1R
  LocMatrix uq = loc_weak_lift(Q, at_x, tq, aq, syzq);
  CHECK(uq.num().is_zero());
  CHECK(uq.den() == Q->parse("y"));

  // T = 0 lifts to 0.
  LocMatrix t0(Matrix::zero(R, 1, 2), R->parse("1+x"), at_m);
  LocMatrix u0 = loc_weak_lift(R, at_m, t0, a, syz);
  CHECK(u0.num().is_zero());

  // Multiple rows share the single s.
  LocMatrix t2(Matrix::from_strings(Q, {{"x"}, {"x^2"}}), Q->one(), at_x);
  LocMatrix u2 = loc_weak_lift(Q, at_x, t2, aq, syzq);
  CHECK(u2.rows() == 2);
  CHECK(u2.num().is_zero());
  CHECK(u2.den() == Q->parse("y"));

  // Not a localized syzygy: T*(A/1) nonzero in the localization.
  RingPtr Rx = QX();
  SetPtr at_x1 = MultiplicativeSet::prime_complement(Rx, {Rx->parse("x")});
  Matrix ax = Matrix::from_strings(Rx, {{"x"}});
  SyzygyResult syzx = ring_syzygies(Rx, ax);
  LocMatrix bad(Matrix::from_strings(Rx, {{"1"}}), Rx->one(), at_x1);
  try {
    (void)loc_weak_lift(Rx, at_x1, bad, ax, syzx);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_localized_syzygy);
  }
}

TEST_CASE("loc_is_zero on the pinned examples") {
  RingPtr Q = QXY_mod_xy();
  SetPtr at_x = MultiplicativeSet::prime_complement(Q, {Q->parse("x")});
  CHECK(loc_is_zero(Q, at_x, Q->parse("x")));
  CHECK(loc_is_zero(Q, at_x, Q->zero()));
  CHECK_FALSE(loc_is_zero(Q, at_x, Q->parse("y")));

  RingPtr R = QX();
  SetPtr at_x1 = MultiplicativeSet::prime_complement(R, {R->parse("x")});
  CHECK_FALSE(loc_is_zero(R, at_x1, R->parse("x")));
  CHECK(loc_is_zero(R, at_x1, R->zero()));
}

TEST_CASE("bl_lift_maximal on the pinned examples") {
  RingPtr R = QXY();
  SetPtr at_m = MultiplicativeSet::prime_complement(R, {R->parse("x"), R->parse("y")});

  auto s1 = bl_lift_maximal(R, at_m, Matrix::from_strings(R, {{"1+x"}}),
                            Matrix::from_strings(R, {{"1"}}));
  REQUIRE(s1.has_value());
  // (num/den)*(1+x) = 1, i.e. num*(1+x) = den exactly.
  CHECK(s1->num().at(0, 0) * R->parse("1+x") == s1->den());

  auto s2 = bl_lift_maximal(R, at_m, Matrix::from_strings(R, {{"x"}}),
                            Matrix::from_strings(R, {{"1"}}));
  CHECK_FALSE(s2.has_value());

  auto s3 = bl_lift_maximal(R, at_m, Matrix::from_strings(R, {{"x"}}),
                            Matrix::from_strings(R, {{"0"}}));
  REQUIRE(s3.has_value());
  CHECK(s3->num().is_zero());
  CHECK(s3->den().is_one());
}

TEST_CASE("unit characterization at a prime complement") {
  // For A = [f], b = [1]: solvable iff f not in p.
  RingPtr R = QXY();
  SetPtr at_m = MultiplicativeSet::prime_complement(R, {R->parse("x"), R->parse("y")});
  Matrix one = Matrix::from_strings(R, {{"1"}});
  InstanceGen gen(71);
  for (int i = 0; i < 100; ++i) {
    Polynomial f = gen.random_poly(R->context(), 2, 3, 4);
    Matrix a = Matrix::from_rows(R, {{f}});
    LocLiftRowOutcome out = loc_lift_row(R, at_m, a, one);
    CHECK(out.solution.has_value() == s_contains(at_m, f));
  }
}

TEST_CASE("method agreement between the dom solver and bl_lift_maximal") {
  RingPtr R = QXY();
  SetPtr at_m = MultiplicativeSet::prime_complement(R, {R->parse("x"), R->parse("y")});
  InstanceGen gen(73);
  for (int i = 0; i < 30; ++i) {
    std::size_t m = std::size_t(gen.uniform(1, 2)), n = std::size_t(gen.uniform(1, 2));
    Matrix a = gen.random_matrix(R, m, n, 2, 2, 4);
    Matrix b;
    if (i % 2 == 0) {
      b = gen.random_matrix(R, 1, m, 1, 2, 3) * a;
    } else {
      b = gen.random_matrix(R, 1, n, 2, 2, 4);
    }
    LocLiftRowOutcome dom = loc_lift_row(R, at_m, a, b);
    auto bl = bl_lift_maximal(R, at_m, a, b);
    CHECK(dom.solution.has_value() == bl.has_value());
    if (dom.solution) {
      CHECK(dom.solution->num() * a == b.scaled(dom.solution->den()));
      CHECK(bl->num() * a == b.scaled(bl->den()));
    }
  }
}

TEST_CASE("method agreement holds over a quotient ring too") {
  RingPtr base = QXY();
  RingPtr Q = Ring::quotient_ring(base, {base->parse("x*y")});
  SetPtr at_m = MultiplicativeSet::prime_complement(Q, {Q->parse("x"), Q->parse("y")});
  InstanceGen gen(83);
  for (int i = 0; i < 20; ++i) {
    std::size_t m = std::size_t(gen.uniform(1, 2)), n = std::size_t(gen.uniform(1, 2));
    Matrix a = gen.random_matrix(Q, m, n, 2, 2, 4);
    Matrix b = (i % 2) ? gen.random_matrix(Q, 1, n, 2, 2, 4)
                       : gen.random_matrix(Q, 1, m, 2, 2, 3) * a;
    LocLiftRowOutcome dom = loc_lift_row(Q, at_m, a, b);
    auto bl = bl_lift_maximal(Q, at_m, a, b);
    CHECK(dom.solution.has_value() == bl.has_value());
  }
}

TEST_CASE("solvable-by-construction systems are never refused") {
  RingPtr R = QXY();
  SetPtr at_m = MultiplicativeSet::prime_complement(R, {R->parse("x"), R->parse("y")});
  InstanceGen gen(79);
  for (int i = 0; i < 25; ++i) {
    std::size_t m = std::size_t(gen.uniform(1, 2)), n = std::size_t(gen.uniform(1, 2));
    std::size_t q = std::size_t(gen.uniform(1, 2));
    Matrix anum = gen.random_matrix(R, m, n, 2, 2, 3);
    Matrix x = gen.random_matrix(R, q, m, 1, 2, 3);
    LocMatrix a(anum, R->parse("1 + x"), at_m);
    LocMatrix b(x * anum, R->parse("1 + y"), at_m);  // B/d_B = (X A)/d_B solvable
    auto sol = loc_lift(R, at_m, a, b);
    CHECK(sol.has_value());
  }
}

TEST_CASE("LocMatrix verifies its denominator") {
  RingPtr R = QXY();
  SetPtr at_m = MultiplicativeSet::prime_complement(R, {R->parse("x"), R->parse("y")});
  CHECK_THROWS_AS(LocMatrix(Matrix::identity(R, 1), R->parse("x"), at_m), Error);
  LocMatrix ok(Matrix::identity(R, 1), R->parse("1 + x"), at_m);
  CHECK(ok.den() == R->parse("1 + x"));
}
