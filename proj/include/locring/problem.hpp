#ifndef LOCRING_PROBLEM_HPP
#define LOCRING_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "locring/bench.hpp"
#include "locring/localization.hpp"

namespace locring {

// One problem file: ring spec, optional multiplicative set, matrices and
// scalars as polynomial strings, plus the task to run. The concrete
// syntax is JSON; see the README for the schema.
struct ProblemFile {
  std::string task;

  bool zt_mode = false;  // ring.field == "Z": the ring is Z[t]
  std::string zt_var = "t";
  RingPtr ring;  // null in zt_mode
  SetPtr set;    // null when the file declares no set

  std::optional<Matrix> A, B;
  Polynomial A_den, B_den;  // default 1 (null in zt_mode)
  std::optional<Polynomial> f;
  std::vector<Polynomial> ideal_gens;
  bool has_ideal = false;

  std::vector<std::vector<zt::ZPoly>> ztA, ztB;
  std::optional<zt::ZPoly> ztf;
  std::vector<zt::ZPoly> zt_ideal;

  BenchConfig bench;
  // Groebner preprocessing spent while building the multiplicative set
  // (reported under timings.gb_ms).
  double set_build_ms = 0;
};

struct CliOverrides {
  std::optional<uint64_t> seed;
  std::optional<std::size_t> count;
  std::optional<std::string> ordering;  // "lex" | "degrevlex"
};

ProblemFile parse_problem(const nlohmann::json& doc, const std::string& task,
                          const CliOverrides& overrides);

struct ResultRecord {
  nlohmann::ordered_json doc;
  int exit_code = 0;  // 0 solved/completed, 1 no-solution
  std::string csv;    // bench only
};

// Dispatch a validated problem file. Every emitted solution re-verifies
// (residual check) before it is serialized.
ResultRecord run_task(const ProblemFile& problem);

}  // namespace locring

#endif
