#include "locring/groebner.hpp"

#include <algorithm>
#include <set>

#include "locring/error.hpp"

namespace locring::engine {

namespace {

NormalFormResult reduce_impl(const ModuleElement& v, const std::vector<ModuleElement>& G,
                             const ModuleOrdering& ord, bool want_cofactors) {
  NormalFormResult out{v.width() ? ModuleElement::zero(v.context(), v.width())
                                 : ModuleElement(),
                       {}};
  if (want_cofactors && !G.empty()) {
    ContextPtr ctx;
    if (G[0].width() > 0) {
      ctx = G[0].context();
    } else if (v.width() > 0) {
      ctx = v.context();
    }
    out.cofactors.assign(G.size(), ctx ? Polynomial(ctx) : Polynomial());
  }
  // Cache leads of G; G is fixed during reduction.
  std::vector<std::optional<ModuleElement::Lead>> leads(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) leads[i] = G[i].lead(ord);

  ModuleElement work = v;
  std::vector<Polynomial> rem_comps = out.remainder.components();
  while (true) {
    auto l = work.lead(ord);
    if (!l) break;
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (!leads[i] || leads[i]->comp != l->comp) continue;
      if (!leads[i]->mon.divides(l->mon)) continue;
      FieldElement qc = l->coeff / leads[i]->coeff;
      Monomial qm = leads[i]->mon.divide_into(l->mon);
      work = work - G[i].times_term(qc, qm);
      if (want_cofactors) {
        out.cofactors[i] += Polynomial::from_terms(work.context(), {{qc, qm}});
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      // Move the irreducible leading term to the remainder.
      const Term& t = work.comp(l->comp).leading_term();
      rem_comps[l->comp] += Polynomial::from_terms(work.context(), {t});
      work = work.drop_lead_of(l->comp);
    }
  }
  out.remainder = ModuleElement(std::move(rem_comps));
  return out;
}

struct Pair {
  std::size_t i, j;
  std::size_t comp;
  Monomial lcm;
  uint64_t deg;
};

bool pair_less(const Pair& a, const Pair& b) {
  if (a.deg != b.deg) return a.deg < b.deg;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

// Content-strip a working element over Q: scale so the coefficients are
// coprime integers, returning the factor applied. Scaling by a unit
// preserves the generated module and every linear identity among rows;
// it is what keeps coefficient growth tame during basis construction.
// No-op over prime fields.
FieldElement primitivize(ModuleElement& w) {
  FieldElement one = w.width() ? FieldElement::one(w.context()->field) : FieldElement();
  if (w.width() == 0 || w.is_zero()) return one;
  if (w.context()->field.kind != FieldSpec::Kind::rationals) return one;
  Integer den_lcm(1);
  for (const Polynomial& p : w.components()) {
    for (const Term& t : p.terms()) {
      const Integer& d = t.coeff.rational().den();
      den_lcm = (den_lcm / Integer::gcd(den_lcm, d)) * d;
    }
  }
  Integer num_gcd(0);
  for (const Polynomial& p : w.components()) {
    for (const Term& t : p.terms()) {
      const Rational& q = t.coeff.rational();
      num_gcd = Integer::gcd(num_gcd, q.num() * (den_lcm / q.den()));
    }
  }
  if (den_lcm.is_one() && num_gcd.is_one()) return one;
  FieldElement factor =
      FieldElement::from_fraction(w.context()->field, den_lcm, num_gcd);
  w = w.scaled(factor);
  return factor;
}

void normalize_lead_sign(ModuleElement& w, const ModuleOrdering& ord) {
  if (w.width() == 0 || w.context()->field.kind != FieldSpec::Kind::rationals) return;
  auto l = w.lead(ord);
  if (l && l->coeff.rational().sign() < 0) {
    w = w.scaled(FieldElement::from_int(w.context()->field, -1));
  }
}

// Reduction used only while building bases: rescales the working element
// after every step, so it computes the normal form up to a unit. `full`
// also moves irreducible terms out (tail reduction); the moved part is
// kept on the same scale as the working part. A term is irreducible by a
// static criterion (its (monomial, component) escapes every reducer
// lead), so whole runs of them are moved in one splice.
ModuleElement gb_reduce(ModuleElement work, const std::vector<ModuleElement>& G,
                        const std::vector<std::optional<ModuleElement::Lead>>& leads,
                        const ModuleOrdering& ord, bool full) {
  if (work.width() == 0) return work;
  primitivize(work);
  std::vector<std::size_t> gsize(G.size(), 0);
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (const Polynomial& p : G[i].components()) gsize[i] += p.terms().size();
  }
  auto pick_reducer = [&](const ModuleElement::Lead& l) -> std::size_t {
    // Fewest-terms reducer, ties by list position: the reduced basis this
    // feeds is canonical whatever the internal choice, and short reducers
    // curb term growth.
    std::size_t best = G.size();
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (!leads[i] || leads[i]->comp != l.comp) continue;
      if (!leads[i]->mon.divides(l.mon)) continue;
      if (best == G.size() || gsize[i] < gsize[best]) best = i;
    }
    return best;
  };

  std::vector<Polynomial> rem(full ? work.width() : 0, Polynomial(work.context()));
  while (true) {
    auto l = work.lead(ord);
    if (!l) break;
    std::size_t best = pick_reducer(*l);
    if (best < G.size()) {
      FieldElement qc = l->coeff / leads[best]->coeff;
      Monomial qm = leads[best]->mon.divide_into(l->mon);
      work = work - G[best].times_term(qc, qm);
      FieldElement factor = primitivize(work);
      if (full && !factor.is_one()) {
        for (Polynomial& p : rem) p = p.scaled(factor);
      }
    } else {
      if (!full) break;  // top-reduction: first irreducible lead ends the pass
      // Splice out the maximal prefix of statically irreducible terms of
      // the lead component.
      const std::vector<Term>& terms = work.comp(l->comp).terms();
      std::vector<Term> moved;
      for (const Term& t : terms) {
        bool reducible = false;
        for (std::size_t i = 0; i < G.size() && !reducible; ++i) {
          if (leads[i] && leads[i]->comp == l->comp && leads[i]->mon.divides(t.mon)) {
            reducible = true;
          }
        }
        if (reducible) break;
        moved.push_back(t);
      }
      rem[l->comp] += Polynomial::from_terms(work.context(), moved);
      std::vector<Polynomial> comps = work.components();
      std::vector<Term> rest(terms.begin() + long(moved.size()), terms.end());
      comps[l->comp] = Polynomial::from_terms(work.context(), std::move(rest));
      work = ModuleElement(std::move(comps));
    }
  }
  if (!full) return work;
  return ModuleElement(std::move(rem)) + work;  // work is zero here
}

}  // namespace

NormalFormResult normal_form_with_cofactors(const ModuleElement& v,
                                            const std::vector<ModuleElement>& G,
                                            const ModuleOrdering& ord) {
  return reduce_impl(v, G, ord, true);
}

ModuleElement normal_form(const ModuleElement& v, const std::vector<ModuleElement>& G,
                          const ModuleOrdering& ord) {
  return reduce_impl(v, G, ord, false).remainder;
}

std::vector<ModuleElement> buchberger(const std::vector<ModuleElement>& gens,
                                      const ModuleOrdering& ord,
                                      std::size_t pair_component_limit) {
  // Elements are stored content-stripped with a positive leading
  // coefficient while the basis is under construction; the canonical
  // head-monic form is produced at the end.
  std::vector<ModuleElement> G;
  std::vector<std::optional<ModuleElement::Lead>> leads;
  // Elements leading outside the tracked component block contribute
  // nothing to completeness there and are dropped entirely; reductions
  // that fall out of the block are treated like reductions to zero.
  auto push_element = [&](const ModuleElement& g) -> bool {
    ModuleElement m = g;
    primitivize(m);
    normalize_lead_sign(m, ord);
    auto l = m.lead(ord);
    if (l->comp >= pair_component_limit) return false;
    leads.push_back(*l);
    G.push_back(std::move(m));
    return true;
  };
  for (const ModuleElement& g : gens) {
    if (!g.is_zero()) push_element(g);
  }

  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> settled;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (leads[i]->comp != leads[j]->comp) continue;
      Monomial l = Monomial::lcm(leads[i]->mon, leads[j]->mon);
      queue.push_back({i, j, leads[i]->comp, l, l.total_degree()});
    }
  };
  for (std::size_t j = 0; j < G.size(); ++j) add_pairs_for(j);

  auto is_settled = [&](std::size_t a, std::size_t b) {
    return settled.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue.size(); ++k) {
      if (pair_less(queue[k], queue[best])) best = k;
    }
    Pair pr = queue[best];
    queue.erase(queue.begin() + long(best));
    settled.insert({pr.i, pr.j});

    // Product criterion: only sound when both elements live entirely in
    // the shared component (the ideal case embedded in the module).
    if (Monomial::coprime(leads[pr.i]->mon, leads[pr.j]->mon) &&
        G[pr.i].single_component() && G[pr.j].single_component()) {
      continue;
    }
    // Chain criterion.
    bool chained = false;
    for (std::size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j || leads[k]->comp != pr.comp) continue;
      if (!leads[k]->mon.divides(pr.lcm)) continue;
      if (is_settled(pr.i, k) && is_settled(k, pr.j)) chained = true;
    }
    if (chained) continue;

    const FieldElement one = FieldElement::one(G[pr.i].context()->field);
    ModuleElement s =
        G[pr.i].times_term(one / leads[pr.i]->coeff,
                           leads[pr.i]->mon.divide_into(pr.lcm)) -
        G[pr.j].times_term(one / leads[pr.j]->coeff,
                           leads[pr.j]->mon.divide_into(pr.lcm));
    ModuleElement r = gb_reduce(std::move(s), G, leads, ord, /*full=*/true);
    if (!r.is_zero()) {
      if (push_element(r)) add_pairs_for(G.size() - 1);
    }
  }

  // Auto-reduction. Minimalize first: drop rows whose lead another lead
  // divides (on equal leads the earlier row survives).
  for (std::size_t i = 0; i < G.size();) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i || leads[k]->comp != leads[i]->comp) continue;
      if (!leads[k]->mon.divides(leads[i]->mon)) continue;
      // On equal leads keep the earlier row.
      if (leads[k]->mon == leads[i]->mon && k > i) continue;
      redundant = true;
    }
    if (redundant) {
      G.erase(G.begin() + long(i));
      leads.erase(leads.begin() + long(i));
    } else {
      ++i;
    }
  }
  // Heads are now pairwise non-divisible, so one full reduction pass per
  // element settles every tail.
  for (std::size_t i = 0; i < G.size(); ++i) {
    std::vector<ModuleElement> others;
    std::vector<std::optional<ModuleElement::Lead>> other_leads;
    others.reserve(G.size() - 1);
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (k != i) {
        others.push_back(G[k]);
        other_leads.push_back(leads[k]);
      }
    }
    ModuleElement r = gb_reduce(G[i], others, other_leads, ord, /*full=*/true);
    primitivize(r);
    normalize_lead_sign(r, ord);
    invariant(!r.is_zero(), "minimal basis element reduced to zero");
    G[i] = std::move(r);
    leads[i] = G[i].lead(ord);
  }
  std::sort(G.begin(), G.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    auto la = a.lead(ord), lb = b.lead(ord);
    return cmp_module_terms(la->mon, la->comp, lb->mon, lb->comp, ord) == Cmp::greater;
  });
  for (ModuleElement& g : G) g = g.monic(ord);
  return G;
}

std::vector<std::vector<Polynomial>> AugmentedGB::syzygy_rows() const {
  std::vector<std::vector<Polynomial>> out;
  out.reserve(syz.size());
  for (const ModuleElement& s : syz) out.push_back(s.components());
  return out;
}

AugmentedGB syzygies_of_rows(const ContextPtr& ctx_in,
                             const std::vector<std::vector<Polynomial>>& rows_a,
                             const MonomialOrdering& ord, bool lift_only,
                             std::size_t ncols) {
  // Work in a context whose ordering matches the requested one.
  ContextPtr ctx = ctx_in;
  std::vector<std::vector<Polynomial>> rows = rows_a;
  if (!(ctx->ord == ord)) {
    ctx = make_context(ctx_in->field, ctx_in->vars, ord);
    for (auto& row : rows) {
      for (Polynomial& p : row) p = p.with_context(ctx);
    }
  }

  AugmentedGB aug;
  aug.ctx = ctx;
  aug.src_rows = rows.size();
  if (!rows.empty()) {
    aug.src_cols = rows[0].size();
  } else {
    aug.src_cols = ncols == static_cast<std::size_t>(-1) ? 0 : ncols;
  }
  for (const auto& row : rows) {
    require(row.size() == aug.src_cols, Errc::dimension_mismatch, "ragged matrix");
  }
  aug.source = rows;
  const std::size_t m = aug.src_rows, n = aug.src_cols;
  aug.ord = ModuleOrdering::left_priority(ord, n, n + m);
  aug.syz_ord = ModuleOrdering::flat(ord, m);

  aug.lift_only = lift_only;
  std::vector<ModuleElement> gens;
  gens.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Polynomial> comps;
    comps.reserve(n + m);
    for (std::size_t j = 0; j < n; ++j) comps.push_back(rows[i][j]);
    for (std::size_t k = 0; k < m; ++k) {
      comps.push_back(k == i ? Polynomial::constant_int(ctx, 1) : Polynomial(ctx));
    }
    gens.push_back(ModuleElement(std::move(comps)));
  }
  aug.rows = buchberger(gens, aug.ord,
                        lift_only ? n : static_cast<std::size_t>(-1));

  for (const ModuleElement& g : aug.rows) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) {
      if (!g.comp(j).is_zero()) left_zero = false;
    }
    if (left_zero) aug.syz.push_back(g.slice(n, n + m));
  }

  // Soundness: every emitted syzygy row annihilates A exactly.
  for (const ModuleElement& s : aug.syz) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial dot(ctx);
      for (std::size_t i = 0; i < m; ++i) dot += s.comp(i) * rows[i][j];
      invariant(dot.is_zero(), "syzygy row fails L*A = 0");
    }
  }
  return aug;
}

LiftRowResult lift_row(const AugmentedGB& aug, const std::vector<Polynomial>& b) {
  const std::size_t m = aug.src_rows, n = aug.src_cols;
  require(b.size() == n, Errc::dimension_mismatch, "row width mismatch in lift");
  std::vector<Polynomial> comps;
  comps.reserve(n + m);
  for (const Polynomial& p : b) comps.push_back(p.with_context(aug.ctx));
  for (std::size_t k = 0; k < m; ++k) comps.push_back(Polynomial(aug.ctx));

  LiftRowResult out{std::nullopt, ModuleElement()};
  if (n + m == 0) {
    out.solution = std::vector<Polynomial>{};
    return out;
  }
  ModuleElement v(std::move(comps));
  out.normal_form = normal_form(v, aug.rows, aug.ord);
  for (std::size_t j = 0; j < n; ++j) {
    if (!out.normal_form.comp(j).is_zero()) return out;  // certified: b not in row space
  }
  std::vector<Polynomial> x;
  x.reserve(m);
  for (std::size_t k = 0; k < m; ++k) x.push_back(-out.normal_form.comp(n + k));
  out.solution = std::move(x);
  return out;
}

std::vector<std::vector<Polynomial>> lift_along_syzygies(
    const AugmentedGB& aug, const std::vector<std::vector<Polynomial>>& T) {
  invariant(!aug.lift_only, "lift_along_syzygies needs a full (non-truncated) basis");
  const std::size_t m = aug.src_rows, n = aug.src_cols;
  std::vector<std::vector<Polynomial>> U;
  U.reserve(T.size());
  for (const auto& t_in : T) {
    require(t_in.size() == m, Errc::dimension_mismatch, "syzygy row width mismatch");
    std::vector<Polynomial> t;
    t.reserve(m);
    for (const Polynomial& p : t_in) t.push_back(p.with_context(aug.ctx));
    // Detected by multiplication: T must consist of genuine syzygies.
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial dot(aug.ctx);
      for (std::size_t i = 0; i < m; ++i) dot += t[i] * aug.source[i][j];
      require(dot.is_zero(), Errc::not_a_syzygy, "row is not a syzygy of the source matrix");
    }
    if (m == 0) {
      U.push_back(std::vector<Polynomial>(aug.syz.size(), Polynomial(aug.ctx)));
      continue;
    }
    NormalFormResult nf = normal_form_with_cofactors(ModuleElement(t), aug.syz, aug.syz_ord);
    invariant(nf.remainder.is_zero(), "syzygy fails to reduce against the syzygy basis");
    U.push_back(std::move(nf.cofactors));
  }
  return U;
}

}  // namespace locring::engine
