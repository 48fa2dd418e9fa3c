#ifndef LOCRING_BENCH_HPP
#define LOCRING_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "locring/localization.hpp"

namespace locring {

struct BenchConfig {
  std::size_t count = 10;
  uint64_t seed = 1;
  std::size_t max_rows = 2;
  std::size_t max_cols = 2;
  int max_degree = 2;
};

struct BenchRow {
  std::size_t id = 0;
  std::size_t m = 0, n = 0;
  uint64_t deg = 0;
  bool solvable_dom = false;
  bool solvable_bl = false;
  double ms_dom = 0;
  double ms_bl = 0;
  bool residual_ok = false;
};

struct BenchOutput {
  std::vector<BenchRow> rows;
  double preprocessing_ms = 0;  // Groebner cache of the maximal ideal
};

// Head-to-head comparison of the dom-based solver and the stacked-system
// solver on seeded random systems (even ids solvable by construction,
// odd ids fully random). A verdict disagreement is a correctness bug and
// aborts with a full instance dump.
BenchOutput bench_compare(const RingPtr& ring, const SetPtr& maximal_set,
                          const BenchConfig& config);

// CSV with header id,m,n,deg,verdict_dom,verdict_bl,ms_dom,ms_bl,residual_ok.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace locring

#endif
