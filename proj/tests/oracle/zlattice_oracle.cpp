#include "zlattice_oracle.hpp"

using locring::Integer;
using locring::zt::ZPoly;

namespace oracle {

std::vector<Integer> degree_lc_profile(const std::vector<ZPoly>& gens,
                                       std::size_t max_check, std::size_t max_total) {
  const std::size_t width = max_total + 1;
  std::vector<std::vector<Integer>> rows;
  for (const ZPoly& f : gens) {
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k + f.degree() <= max_total; ++k) {
      std::vector<Integer> row(width, Integer(0));
      for (std::size_t i = 0; i <= f.degree(); ++i) row[i + k] = f.coeff(i);
      rows.push_back(std::move(row));
    }
  }

  // Integer staircase: process columns from the highest degree down,
  // running Euclid on the column entries of the still-active rows.
  std::vector<Integer> profile(max_check + 1, Integer(0));
  std::size_t row_start = 0;
  for (std::size_t col = width; col-- > 0;) {
    while (true) {
      std::size_t i = rows.size(), j = rows.size();
      for (std::size_t r = row_start; r < rows.size(); ++r) {
        if (rows[r][col].is_zero()) continue;
        if (i == rows.size()) {
          i = r;
        } else {
          j = r;
          break;
        }
      }
      if (j == rows.size()) break;
      // Reduce the larger entry by the smaller one.
      if (rows[i][col].abs() < rows[j][col].abs()) std::swap(i, j);
      Integer q, rem;
      Integer::divmod_floor(rows[i][col], rows[j][col], q, rem);
      for (std::size_t c2 = 0; c2 < width; ++c2) {
        rows[i][c2] = rows[i][c2] - q * rows[j][c2];
      }
    }
    for (std::size_t r = row_start; r < rows.size(); ++r) {
      if (!rows[r][col].is_zero()) {
        std::swap(rows[r], rows[row_start]);
        if (rows[row_start][col].is_negative()) {
          for (Integer& x : rows[row_start]) x = -x;
        }
        if (col <= max_check) profile[col] = rows[row_start][col];
        ++row_start;
        break;
      }
    }
  }
  return profile;
}

}  // namespace oracle
