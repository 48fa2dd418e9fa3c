#ifndef LOCRING_INSTANCE_GEN_HPP
#define LOCRING_INSTANCE_GEN_HPP

#include <cstdint>
#include <random>

#include "locring/ring.hpp"
#include "locring/zt.hpp"

namespace locring {

// Seeded random instances for tests and benchmarks. mt19937_64 output is
// specified by the standard and the mapping below avoids std
// distributions, so streams are reproducible across platforms.
class InstanceGen {
public:
  explicit InstanceGen(uint64_t seed) : rng_(seed) {}

  long long uniform(long long lo, long long hi);  // inclusive bounds
  bool coin() { return uniform(0, 1) == 1; }

  Polynomial random_poly(const ContextPtr& ctx, int max_deg, int max_terms,
                         int coeff_bound, bool allow_zero = true);
  Matrix random_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols,
                       int max_deg, int max_terms, int coeff_bound);
  zt::ZPoly random_zpoly(int max_deg, int coeff_bound, bool allow_zero = true);

private:
  std::mt19937_64 rng_;
};

}  // namespace locring

#endif
