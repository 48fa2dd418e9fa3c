// Acceptance suite: one line per criterion, exact tolerances, seeded
// instances. Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "locring/bench.hpp"
#include "locring/error.hpp"
#include "locring/instance_gen.hpp"
#include "locring/localization.hpp"
#include "locring/poly_io.hpp"
#include "oracle/pid_oracle.hpp"
#include "oracle/zlattice_oracle.hpp"

using namespace locring;
using Clock = std::chrono::steady_clock;

namespace {

int g_failed = 0;

struct Criterion {
  int number = 0;
  std::string name;
  bool pass = true;
  std::size_t instances = 0;
  std::string detail;
  Clock::time_point start = Clock::now();

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void finish() {
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%zu instances, %.1fs)%s%s\n",
                pass ? "PASS" : "FAIL", number, name.c_str(), instances, secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failed;
  }
};

RingPtr make_qring(const std::vector<std::string>& vars) {
  return Ring::polynomial_ring(FieldSpec::rationals(), vars,
                               MonomialOrdering::degrevlex());
}

Polynomial unipoly_to_engine(const oracle::UniPoly& p, const ContextPtr& ctx) {
  std::vector<Term> terms;
  for (std::size_t d = 0; d < p.c.size(); ++d) {
    if (p.c[d].is_zero()) continue;
    Monomial m(1);
    m[0] = uint32_t(d);
    terms.push_back({FieldElement::from_fraction(ctx->field, p.c[d].num(), p.c[d].den()), m});
  }
  return Polynomial::from_terms(ctx, terms);
}

oracle::UniMatrix matrix_to_oracle(const Matrix& m) {
  oracle::UniMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i].push_back(oracle::from_engine(m.at(i, j)));
    }
  }
  return out;
}

// ---------------------------------------------------------------- 1
void criterion1() {
  Criterion c;
  c.number = 1;
  c.name = "syzygy soundness and completeness over Q[x,y]";
  RingPtr R = make_qring({"x", "y"});
  InstanceGen gen(1001);
  for (int inst = 0; inst < 200; ++inst) {
    ++c.instances;
    std::size_t m = std::size_t(gen.uniform(1, 3)), n = std::size_t(gen.uniform(1, 3));
    Matrix a = gen.random_matrix(R, m, n, 3, 3, 5);
    SyzygyResult syz = ring_syzygies(R, a);
    if (!(syz.L * a).is_zero()) {
      c.fail("L*A != 0 on instance " + std::to_string(inst));
      break;
    }
    const std::size_t o = syz.L.rows();
    if (o == 0) continue;
    std::size_t p = std::size_t(gen.uniform(1, 2));
    Matrix u = gen.random_matrix(R, p, o, 2, 2, 4);
    Matrix t = u * syz.L;
    if (!(t * a).is_zero()) {
      c.fail("T*A != 0 for constructed T");
      break;
    }
    try {
      Matrix u2 = lift_of_syzygies(R, syz, t);
      if (u2 * syz.L != t) {
        c.fail("U'*L != T on instance " + std::to_string(inst));
        break;
      }
    } catch (const Error& e) {
      c.fail(std::string("lift failed: ") + e.what());
      break;
    }
  }
  c.finish();
}

// ---------------------------------------------------------------- 2
void criterion2() {
  Criterion c;
  c.number = 2;
  c.name = "PID oracle equivalence over Q[x]";
  RingPtr R = Ring::polynomial_ring(FieldSpec::rationals(), {"x"}, MonomialOrdering::lex());
  InstanceGen gen(2002);
  for (int inst = 0; inst < 200; ++inst) {
    ++c.instances;
    std::size_t m = std::size_t(gen.uniform(1, 3)), n = std::size_t(gen.uniform(1, 3));
    Matrix a = gen.random_matrix(R, m, n, 4, 3, 6);
    SyzygyResult syz = ring_syzygies(R, a);
    oracle::UniMatrix ao = matrix_to_oracle(a);
    oracle::Elimination elim = oracle::eliminate(ao);

    // Rank of the solution space agrees: rank L = m - rank A.
    std::size_t oracle_kernel_rank = m - elim.pivots.size();
    std::size_t engine_kernel_rank =
        oracle::rank_fraction_field(matrix_to_oracle(syz.L));
    if (engine_kernel_rank != oracle_kernel_rank) {
      c.fail("kernel rank mismatch on instance " + std::to_string(inst));
      break;
    }

    // Mutual membership of the two syzygy generating sets.
    oracle::UniMatrix oracle_syz = oracle::syzygy_rows(elim);
    if (!oracle_syz.empty()) {
      oracle::Elimination selim = oracle::eliminate(oracle_syz);
      for (std::size_t i = 0; i < syz.L.rows(); ++i) {
        oracle::UniMatrix lrow = matrix_to_oracle(
            Matrix::from_rows(R, {syz.L.row(i)}));
        if (!oracle::solve_row(selim, lrow[0])) {
          c.fail("engine syzygy outside the oracle span");
          break;
        }
      }
      std::vector<std::vector<Polynomial>> back;
      for (const auto& row : oracle_syz) {
        std::vector<Polynomial> prow;
        for (const oracle::UniPoly& e : row) prow.push_back(unipoly_to_engine(e, R->context()));
        back.push_back(std::move(prow));
      }
      try {
        Matrix t = Matrix::from_rows(R, back);
        Matrix u = lift_of_syzygies(R, syz, t);
        (void)u;  // U*L = T verified inside
      } catch (const Error& e) {
        c.fail(std::string("oracle syzygy does not lift: ") + e.what());
      }
    } else if (syz.L.rows() != 0) {
      // No oracle syzygies: every engine row must be zero.
      if (!syz.L.is_zero()) c.fail("engine reports nonzero syzygies, oracle none");
    }
    if (!c.pass) break;

    // Solvability verdicts.
    Matrix b;
    if (inst % 2 == 0) {
      b = gen.random_matrix(R, 1, m, 2, 2, 4) * a;
    } else {
      b = gen.random_matrix(R, 1, n, 4, 3, 6);
    }
    auto engine_lift = ring_lift(R, a, b);
    oracle::UniMatrix bo = matrix_to_oracle(b);
    auto oracle_lift = oracle::solve_row(elim, bo[0]);
    if (engine_lift.has_value() != oracle_lift.has_value()) {
      c.fail("solvability verdict mismatch on instance " + std::to_string(inst));
      break;
    }
    if (oracle_lift) {
      // Verify the oracle's own residual in oracle arithmetic.
      for (std::size_t j = 0; j < n; ++j) {
        oracle::UniPoly acc;
        for (std::size_t i = 0; i < m; ++i) acc = acc + (*oracle_lift)[i] * ao[i][j];
        if (acc != bo[0][j]) {
          c.fail("oracle residual nonzero");
          break;
        }
      }
    }
    if (!c.pass) break;
  }
  c.finish();
}

// ---------------------------------------------------------------- 3
void criterion3() {
  Criterion c;
  c.number = 3;
  c.name = "dom agrees with the linear-algebra oracle over Q[x]";
  RingPtr R = Ring::polynomial_ring(FieldSpec::rationals(), {"x"}, MonomialOrdering::lex());
  InstanceGen gen(3003);
  for (int inst = 0; inst < 100; ++inst) {
    ++c.instances;
    std::size_t m = std::size_t(gen.uniform(1, 2)), n = std::size_t(gen.uniform(1, 2));
    Matrix a = gen.random_matrix(R, m, n, 2, 2, 5);
    Matrix b = gen.random_matrix(R, 1, n, 2, 2, 5);
    DomResult dom = dom_with_cofactors(R, a, b);
    std::vector<oracle::UniPoly> engine_gens;
    for (const DomGenerator& g : dom.gens) engine_gens.push_back(oracle::from_engine(g.r));
    oracle::UniPoly engine_gcd = oracle::gcd_list(engine_gens);
    oracle::UniPoly oracle_gcd =
        oracle::dom_oracle(matrix_to_oracle(a), matrix_to_oracle(b)[0], 8);
    if (engine_gcd != oracle_gcd) {
      c.fail("dom ideal mismatch on instance " + std::to_string(inst));
      break;
    }
  }
  c.finish();
}

// ---------------------------------------------------------------- 4
void criterion4() {
  Criterion c;
  c.number = 4;
  c.name = "localized solver agrees with the stacked-system method";
  struct Setup {
    RingPtr R;
    SetPtr S;
  };
  std::vector<Setup> setups;
  {
    RingPtr R2 = make_qring({"x", "y"});
    setups.push_back({R2, MultiplicativeSet::prime_complement(
                              R2, {R2->parse("x"), R2->parse("y")})});
    RingPtr R3 = make_qring({"x", "y", "z"});
    setups.push_back({R3, MultiplicativeSet::prime_complement(
                              R3, {R3->parse("x"), R3->parse("y"), R3->parse("z")})});
  }
  InstanceGen gen(4004);
  for (int inst = 0; inst < 500; ++inst) {
    ++c.instances;
    const Setup& s = setups[std::size_t(inst % 2)];
    std::size_t m = std::size_t(gen.uniform(1, 3)), n = std::size_t(gen.uniform(1, 3));
    Matrix a = gen.random_matrix(s.R, m, n, 2, 2, 4);
    Matrix b;
    if (inst % 4 < 2) {
      b = gen.random_matrix(s.R, 1, m, 1, 2, 3) * a;
    } else {
      b = gen.random_matrix(s.R, 1, n, 2, 2, 4);
    }
    LocLiftRowOutcome dom = loc_lift_row(s.R, s.S, a, b);
    std::optional<LocMatrix> bl = bl_lift_maximal(s.R, s.S, a, b);
    if (dom.solution.has_value() != bl.has_value()) {
      c.fail("verdict mismatch on instance " + std::to_string(inst));
      break;
    }
    if (dom.solution) {
      if (dom.solution->num() * a != b.scaled(dom.solution->den()) ||
          bl->num() * a != b.scaled(bl->den())) {
        c.fail("residual check failed on instance " + std::to_string(inst));
        break;
      }
    } else {
      // Refusal soundness: every dom generator re-certifies membership
      // in the maximal ideal.
      for (const DomGenerator& g : dom.dom.gens) {
        if (!s.S->ideal_membership(g.r).has_value()) {
          c.fail("uncertified refusal on instance " + std::to_string(inst));
          break;
        }
      }
      if (!c.pass) break;
    }
  }
  c.finish();
}

// ---------------------------------------------------------------- 5
void criterion5() {
  Criterion c;
  c.number = 5;
  c.name = "worked fixtures";
  auto expect = [&](bool cond, const std::string& what) {
    ++c.instances;
    if (!cond) c.fail(what);
  };

  RingPtr Rx = Ring::polynomial_ring(FieldSpec::rationals(), {"x"}, MonomialOrdering::lex());
  SetPtr at_x = MultiplicativeSet::prime_complement(Rx, {Rx->parse("x")});

  LocLiftRowOutcome refused = loc_lift_row(Rx, at_x, Matrix::from_strings(Rx, {{"x"}}),
                                           Matrix::from_strings(Rx, {{"1"}}));
  expect(!refused.solution.has_value(), "A=[x], b=[1] at <x> must refuse");
  expect(refused.dom.gens.size() == 1 && refused.dom.gens[0].r == Rx->parse("x"),
         "refusal certificate dom = <x>");
  expect(refused.loc.prime_membership_proofs.size() == 1,
         "refusal carries a membership proof");

  LocLiftRowOutcome solved = loc_lift_row(Rx, at_x, Matrix::from_strings(Rx, {{"1+x"}}),
                                          Matrix::from_strings(Rx, {{"1"}}));
  expect(solved.solution.has_value() && solved.solution->den() == Rx->parse("1+x") &&
             solved.solution->num().at(0, 0).is_one(),
         "A=[1+x], b=[1] at <x> solves as 1/(1+x)");

  RingPtr base = make_qring({"x", "y"});
  RingPtr Q = Ring::quotient_ring(base, {base->parse("x*y")});
  SetPtr qat_x = MultiplicativeSet::prime_complement(Q, {Q->parse("x")});
  expect(loc_is_zero(Q, qat_x, Q->parse("x")), "x/1 = 0 in (Q[x,y]/<xy>)_<x>");

  Matrix aq = Matrix::from_strings(Q, {{"x"}});
  SyzygyResult syzq = ring_syzygies(Q, aq);
  LocMatrix tq(Matrix::from_strings(Q, {{"x"}}), Q->one(), qat_x);
  try {
    LocMatrix uq = loc_weak_lift(Q, qat_x, tq, aq, syzq);
    expect(uq.num().is_zero() && uq.den() == Q->parse("y"),
           "torsion weak lift returns 0/y");
  } catch (const Error& e) {
    expect(false, std::string("torsion weak lift threw: ") + e.what());
  }

  SetPtr zar = MultiplicativeSet::zariskification(Rx, {Rx->parse("x")});
  LocalizationResult z =
      localization_problem(zar, IdealSpec::make(Rx, {Rx->parse("1-x")}));
  expect(z.witness.has_value() && z.witness->element == Rx->parse("1-x"),
         "Zariskification witness 1-x");

  zt::MonicOutcome no = zt::monic_localization_problem({zt::ZPoly::parse("2*t+1")});
  expect(!no.witness.has_value() && no.lc_gcd == Integer(2),
         "<2t+1> contains no monic polynomial");
  zt::MonicOutcome yes =
      zt::monic_localization_problem({zt::ZPoly::parse("2"), zt::ZPoly::parse("t^2")});
  expect(yes.witness.has_value() && yes.witness->witness == zt::ZPoly::parse("t^2"),
         "<2, t^2> contains the monic witness t^2");
  c.finish();
}

// ---------------------------------------------------------------- 6
void criterion6() {
  Criterion c;
  c.number = 6;
  c.name = "Z[t] strong bases match the lattice enumeration";
  InstanceGen gen(6006);
  const std::size_t max_check = 6;
  for (int inst = 0; inst < 50; ++inst) {
    ++c.instances;
    std::vector<zt::ZPoly> gens;
    int ng = int(gen.uniform(1, 3));
    for (int k = 0; k < ng; ++k) gens.push_back(gen.random_zpoly(4, 10));

    zt::MonicOutcome out = zt::monic_localization_problem(gens);
    const zt::StandardBasis& sb = out.basis;

    // Expected profile from the basis: gcd of leading coefficients of
    // basis elements of degree <= d.
    std::vector<Integer> gb_profile(max_check + 1, Integer(0));
    for (std::size_t d = 0; d <= max_check; ++d) {
      Integer g(0);
      for (const zt::ZPoly& b : sb.gens) {
        if (b.degree() <= d) g = Integer::gcd(g, b.leading_coeff());
      }
      gb_profile[d] = g;
    }

    // Lattice size: large enough that every standard representation of a
    // degree <= 6 ideal element fits (bound from the transform rows).
    std::size_t max_total = max_check;
    for (std::size_t i = 0; i < sb.gens.size(); ++i) {
      std::size_t ti = sb.gens[i].degree();
      for (std::size_t j = 0; j < sb.input.size(); ++j) {
        if (sb.transform[i][j].is_zero() || sb.input[j].is_zero()) continue;
        ti = std::max(ti, sb.transform[i][j].degree() + sb.input[j].degree());
      }
      std::size_t need = max_check - std::min(max_check, sb.gens[i].degree()) + ti;
      max_total = std::max(max_total, need);
    }
    std::vector<Integer> lattice = oracle::degree_lc_profile(gens, max_check, max_total);

    for (std::size_t d = 0; d <= max_check; ++d) {
      if (lattice[d] != gb_profile[d]) {
        c.fail("leading-term profile mismatch at degree " + std::to_string(d) +
               " on instance " + std::to_string(inst));
        break;
      }
    }
    if (!c.pass) break;

    bool lattice_monic = false;
    for (std::size_t d = 0; d <= max_check; ++d) {
      if (lattice[d].is_one()) lattice_monic = true;
    }
    if (lattice_monic != out.witness.has_value()) {
      c.fail("monic verdict mismatch on instance " + std::to_string(inst));
      break;
    }
  }
  c.finish();
}

// ---------------------------------------------------------------- 7
std::string run_and_capture(const std::string& cli, const std::string& args, int* code) {
  std::string out_file = "acceptance_stdout.tmp";
  std::string cmd = cli + " " + args + " > " + out_file + " 2> acceptance_stderr.tmp";
  int rc = std::system(cmd.c_str());
  if (code) *code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out_file);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string strip_timings_json(const std::string& text) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(text);
  doc.erase("timings");
  return doc.dump(2);
}

std::string strip_ms_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i == 6 || i == 7) continue;
      out << cells[i] << (i + 1 < cells.size() ? "," : "");
    }
    out << "\n";
  }
  return out.str();
}

void criterion7(const std::string& cli, const std::string& fixtures) {
  Criterion c;
  c.number = 7;
  c.name = "CLI output is deterministic for a fixed seed";
  struct Case {
    const char* task;
    const char* file;
  };
  const std::vector<Case> cases = {
      {"lift", "lift_qx.json"},          {"locsolve", "locsolve_refused.json"},
      {"locsolve", "locsolve_solved.json"}, {"iszero", "iszero_torsion.json"},
      {"locsolve", "zariski_solved.json"},  {"locsolve", "zt_monic_yes.json"},
      {"locsolve", "zt_monic_no.json"},     {"dom", "dom_qx.json"},
      {"member", "member_qxy.json"},        {"syz", "syz_koszul.json"},
      {"lift", "lift_f7.json"},             {"member", "zt_member.json"},
  };
  for (const Case& k : cases) {
    ++c.instances;
    int code1 = 0, code2 = 0;
    std::string args = std::string(k.task) + " --in " + fixtures + "/" + k.file;
    std::string a = run_and_capture(cli, args, &code1);
    std::string b = run_and_capture(cli, args, &code2);
    try {
      if (strip_timings_json(a) != strip_timings_json(b) || code1 != code2) {
        c.fail(std::string("nondeterministic output for ") + k.file);
      }
    } catch (...) {
      c.fail(std::string("unparseable output for ") + k.file);
    }
  }
  {
    ++c.instances;
    int code1 = 0, code2 = 0;
    std::string args = "bench --in " + fixtures + "/bench_small.json --seed 7 --count 8";
    std::string a = run_and_capture(cli, args, &code1);
    std::string b = run_and_capture(cli, args, &code2);
    if (strip_ms_csv(a) != strip_ms_csv(b) || code1 != code2 || code1 != 0) {
      c.fail("nondeterministic bench CSV");
    }
  }
  std::remove("acceptance_stdout.tmp");
  std::remove("acceptance_stderr.tmp");
  c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli, fixtures;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string key = argv[i];
    if (key == "--cli") cli = argv[i + 1];
    if (key == "--fixtures") fixtures = argv[i + 1];
  }
  if (cli.empty() || fixtures.empty()) {
    std::cerr << "usage: acceptance_tests --cli <locring binary> --fixtures <dir>\n";
    return 64;
  }
  auto start = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7(cli, fixtures);
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%s: %d criterion(s) failed, total %.1fs\n",
              g_failed ? "FAIL" : "OK", g_failed, secs);
  return g_failed;
}
