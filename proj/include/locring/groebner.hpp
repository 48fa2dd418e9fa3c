#ifndef LOCRING_GROEBNER_HPP
#define LOCRING_GROEBNER_HPP

#include <optional>
#include <vector>

#include "locring/module.hpp"

namespace locring::engine {

struct NormalFormResult {
  ModuleElement remainder;
  std::vector<Polynomial> cofactors;  // v = sum cofactors[i]*G[i] + remainder
};

// Division with remainder in a free module. Total function: reduces every
// term of v, choosing the first row of G (in list order) whose leading
// term divides, so results are deterministic for a fixed G.
NormalFormResult normal_form_with_cofactors(const ModuleElement& v,
                                            const std::vector<ModuleElement>& G,
                                            const ModuleOrdering& ord);
ModuleElement normal_form(const ModuleElement& v, const std::vector<ModuleElement>& G,
                          const ModuleOrdering& ord);

// Buchberger with the normal pair-selection strategy (minimal lcm degree)
// and the product/chain criteria. Output is fully auto-reduced, head-monic
// and sorted descending by leading term, hence canonical.
//
// pair_component_limit restricts S-pair formation to leads in components
// < limit. With a left-priority ordering, rows leading in the right block
// have zero left blocks, so their mutual S-vectors never touch the left
// block: skipping them yields a basis still complete for every lead in
// the left block (enough for lifting, not for syzygy generation).
std::vector<ModuleElement> buchberger(
    const std::vector<ModuleElement>& gens, const ModuleOrdering& ord,
    std::size_t pair_component_limit = static_cast<std::size_t>(-1));

// Groebner data of the rows [A_i | e_i] of (A | I_m) under a module
// ordering giving priority to the left block. Rows with vanishing left
// block yield the universal row syzygies of A; keeping the whole basis
// turns later lifts into plain reductions.
struct AugmentedGB {
  ContextPtr ctx;
  std::size_t src_rows = 0;  // m
  std::size_t src_cols = 0;  // n
  std::vector<std::vector<Polynomial>> source;  // the input rows of A
  ModuleOrdering ord;                  // width n+m
  std::vector<ModuleElement> rows;     // reduced GB, width n+m
  ModuleOrdering syz_ord;              // width m
  std::vector<ModuleElement> syz;      // right-block projections of zero-left rows
  bool lift_only = false;              // syz not universal, lifts only

  // Syzygy matrix rows as plain polynomial rows (o x m).
  std::vector<std::vector<Polynomial>> syzygy_rows() const;
};

// lift_only skips the S-pairs between pure syzygy rows: cheaper, still
// sound and complete for lift_row, but the syz block then no longer
// generates the full syzygy module. ncols disambiguates the width of a
// matrix with zero rows.
AugmentedGB syzygies_of_rows(const ContextPtr& ctx,
                             const std::vector<std::vector<Polynomial>>& rows_a,
                             const MonomialOrdering& ord, bool lift_only = false,
                             std::size_t ncols = static_cast<std::size_t>(-1));

struct LiftRowResult {
  std::optional<std::vector<Polynomial>> solution;  // x with x*A = b
  ModuleElement normal_form;  // full width-(n+m) remainder; nonzero left
                              // block certifies b outside the row space
};

LiftRowResult lift_row(const AugmentedGB& aug, const std::vector<Polynomial>& b);

// For T (p x m) with T*A = 0, produce U with U*L = T where L are the
// syzygy rows of aug. Throws not_a_syzygy when T*A != 0.
std::vector<std::vector<Polynomial>> lift_along_syzygies(
    const AugmentedGB& aug, const std::vector<std::vector<Polynomial>>& T);

}  // namespace locring::engine

#endif
