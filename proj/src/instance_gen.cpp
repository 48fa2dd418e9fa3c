#include "locring/instance_gen.hpp"

#include "locring/error.hpp"

namespace locring {

long long InstanceGen::uniform(long long lo, long long hi) {
  require(lo <= hi, Errc::internal, "empty range");
  uint64_t span = uint64_t(hi - lo) + 1;
  return lo + (long long)(rng_() % span);
}

Polynomial InstanceGen::random_poly(const ContextPtr& ctx, int max_deg, int max_terms,
                                    int coeff_bound, bool allow_zero) {
  long long nterms = uniform(allow_zero ? 0 : 1, max_terms);
  std::vector<Term> terms;
  for (long long t = 0; t < nterms; ++t) {
    long long mag = uniform(1, coeff_bound);
    FieldElement c = FieldElement::from_int(ctx->field, coin() ? mag : -mag);
    Monomial m(ctx->nvars());
    long long budget = uniform(0, max_deg);
    for (std::size_t v = 0; v < ctx->nvars() && budget > 0; ++v) {
      long long e = uniform(0, budget);
      m[v] = uint32_t(e);
      budget -= e;
    }
    if (!c.is_zero()) terms.push_back({std::move(c), std::move(m)});
  }
  Polynomial p = Polynomial::from_terms(ctx, std::move(terms));
  if (!allow_zero && p.is_zero()) return Polynomial::constant_int(ctx, 1);
  return p;
}

Matrix InstanceGen::random_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols,
                                  int max_deg, int max_terms, int coeff_bound) {
  std::vector<std::vector<Polynomial>> data(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      data[i].push_back(random_poly(ring->context(), max_deg, max_terms, coeff_bound));
    }
  }
  Matrix m = rows ? Matrix::from_rows(ring, data) : Matrix::zero(ring, 0, cols);
  return m;
}

zt::ZPoly InstanceGen::random_zpoly(int max_deg, int coeff_bound, bool allow_zero) {
  long long deg = uniform(0, max_deg);
  std::vector<Integer> coeffs(std::size_t(deg) + 1, Integer(0));
  for (long long i = 0; i <= deg; ++i) {
    coeffs[std::size_t(i)] = Integer(uniform(-coeff_bound, coeff_bound));
  }
  zt::ZPoly p = zt::ZPoly::from_coeffs(std::move(coeffs));
  if (!allow_zero && p.is_zero()) return zt::ZPoly::constant(Integer(1));
  return p;
}

}  // namespace locring
