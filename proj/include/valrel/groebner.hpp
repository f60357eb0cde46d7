#pragma once

#include "valrel/budget.hpp"
#include "valrel/mpoly.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace valrel {

/// Gröbner basis in insertion order, never rescaled or interreduced.
template <class F>
struct GBasis {
  std::vector<MultiPoly<F>> elements;
  OrderSpec order;
};

/// What happened to one pair (first < second) of a round snapshot. Only
/// monomial data is recorded so runs over K and over K(z) can be compared.
struct PairRecord {
  std::size_t first = 0;
  std::size_t second = 0;
  /// The two snapshot elements were equal polynomials; the pair was skipped.
  bool equal = false;
  std::optional<Monomial> difference_lead;
  std::optional<Monomial> spoly_lead;
  std::vector<std::pair<std::size_t, Monomial>> steps;
  std::optional<Monomial> remainder_lead;

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

struct BuchbergerTrace {
  std::vector<Monomial> generator_leads;
  std::vector<std::vector<PairRecord>> rounds;

  friend bool operator==(const BuchbergerTrace&, const BuchbergerTrace&) = default;
};

/// Hooks into every polynomial whose leading data the algorithm inspects.
template <class F>
class BuchbergerObserver {
 public:
  virtual ~BuchbergerObserver() = default;
  virtual void on_generator(const MultiPoly<F>&) {}
  virtual void on_pair_difference(const MultiPoly<F>&) {}
  virtual void on_spoly(const MultiPoly<F>&) {}
  virtual void on_reduction_step(const MultiPoly<F>&) {}
};

struct BuchbergerOptions {
  StepBudget* budget = nullptr;
  BuchbergerTrace* trace = nullptr;
};

/// Buchberger's completion with a round schedule: snapshot G' := G, treat
/// every pair (a, b), a < b, of the snapshot, weak-reduce S(G'_a, G'_b) by
/// G' in list order and append nonzero remainders to G; stop when a round
/// adds nothing. Zero inputs are dropped.
template <class F>
GBasis<F> buchberger(const std::vector<MultiPoly<F>>& input, const OrderSpec& ord,
                     BuchbergerOptions opts = {}, BuchbergerObserver<F>* observer = nullptr) {
  GBasis<F> g{{}, ord};
  std::vector<LeadData<F>> leads;
  for (const auto& p : input) {
    if (p.is_zero()) continue;
    g.elements.push_back(p);
    leads.push_back(lead(p, ord));
    if (observer) observer->on_generator(p);
    if (opts.trace) opts.trace->generator_leads.push_back(leads.back().mon);
  }

  while (true) {
    const std::size_t snapshot = g.elements.size();
    const std::vector<MultiPoly<F>> frozen(g.elements.begin(), g.elements.end());
    const std::vector<LeadData<F>> frozen_leads(leads.begin(), leads.end());
    std::vector<PairRecord> round;
    for (std::size_t a = 0; a < snapshot; ++a) {
      for (std::size_t b = a + 1; b < snapshot; ++b) {
        PairRecord rec;
        rec.first = a;
        rec.second = b;
        const MultiPoly<F>& p = frozen[a];
        const MultiPoly<F>& q = frozen[b];
        if (p == q) {
          rec.equal = true;
          if (opts.trace) round.push_back(std::move(rec));
          continue;
        }
        MultiPoly<F> diff = p - q;
        if (observer) observer->on_pair_difference(diff);
        rec.difference_lead = lead(diff, ord).mon;

        MultiPoly<F> s = s_poly(p, q, ord);
        if (!s.is_zero()) {
          if (observer) observer->on_spoly(s);
          rec.spoly_lead = lead(s, ord).mon;
          auto step_hook = [&](const MultiPoly<F>& current) {
            if (observer && !current.is_zero()) observer->on_reduction_step(current);
          };
          WeakDivision<F> div = weak_remainder(std::move(s), frozen_leads, frozen, ord, opts.budget, step_hook);
          for (const auto& st : div.trace) rec.steps.emplace_back(st.divisor, st.quotient);
          if (!div.remainder.is_zero()) {
            leads.push_back(lead(div.remainder, ord));
            rec.remainder_lead = leads.back().mon;
            g.elements.push_back(std::move(div.remainder));
          }
        }
        if (opts.trace) round.push_back(std::move(rec));
      }
    }
    if (opts.trace) opts.trace->rounds.push_back(std::move(round));
    if (g.elements.size() == snapshot) break;
  }
  return g;
}

/// Buchberger criterion: every pair's S-polynomial weak-reduces to zero.
template <class F>
bool satisfies_buchberger_criterion(const GBasis<F>& g) {
  for (std::size_t a = 0; a < g.elements.size(); ++a)
    for (std::size_t b = a + 1; b < g.elements.size(); ++b) {
      MultiPoly<F> s = s_poly(g.elements[a], g.elements[b], g.order);
      if (!weak_remainder(s, g.elements, g.order).remainder.is_zero()) return false;
    }
  return true;
}

/// Membership test; decisive when g is a Gröbner basis.
template <class F>
bool reduce_to_zero(const MultiPoly<F>& f, const GBasis<F>& g) {
  if (f.is_zero()) return true;
  return weak_remainder(f, g.elements, g.order).remainder.is_zero();
}

/// Fully reduced normal form (every term, not only the leading one). Linear
/// in f, and zero exactly for ideal members when g is a Gröbner basis.
template <class F>
MultiPoly<F> normal_form(MultiPoly<F> f, const std::vector<MultiPoly<F>>& divisors, const OrderSpec& ord,
                         StepBudget* budget = nullptr) {
  std::vector<LeadData<F>> leads;
  for (const auto& d : divisors) leads.push_back(lead(d, ord));
  MultiPoly<F> out(f.num_vars());
  while (!f.is_zero()) {
    LeadData<F> lf = lead(f, ord);
    std::size_t k = 0;
    while (k < divisors.size() && !mono_divides(leads[k].mon, lf.mon)) ++k;
    if (k == divisors.size()) {
      out.add_term(lf.mon, lf.coeff);
      f.erase(lf.mon);
      continue;
    }
    if (budget) budget->charge(divisors.size());
    f.sub_scaled(lf.coeff / leads[k].coeff, mono_quotient(lf.mon, leads[k].mon), divisors[k]);
  }
  return out;
}

template <class F>
struct EliminationResult {
  /// Basis elements free of T_{i+1}, ..., T_N.
  std::vector<MultiPoly<F>> polys;
  GBasis<F> basis;
  /// False under the paper-literal order, which is not an elimination order:
  /// `polys` may then miss elements of the elimination ideal.
  bool guaranteed = true;
};

/// Basis elements of a Gröbner basis of (input) that involve only T_1..T_keep.
template <class F>
EliminationResult<F> elim_intersection(const std::vector<MultiPoly<F>>& input, std::size_t keep, OrderMode mode,
                                       BuchbergerOptions opts = {}) {
  EliminationResult<F> r;
  r.basis = buchberger(input, OrderSpec{keep, mode}, opts);
  r.guaranteed = mode == OrderMode::ElimStandard;
  for (const auto& p : r.basis.elements)
    if (p.depends_only_on_first(keep)) r.polys.push_back(p);
  return r;
}

/// Minimal, interreduced, monic basis of the same ideal. Output-only: the
/// exceptional-locus bookkeeping always works with the raw basis.
template <class F>
GBasis<F> canonical_basis(const GBasis<F>& g) {
  std::vector<MultiPoly<F>> minimal;
  for (std::size_t k = 0; k < g.elements.size(); ++k) {
    Monomial mk = lead(g.elements[k], g.order).mon;
    bool redundant = false;
    for (std::size_t j = 0; j < g.elements.size() && !redundant; ++j) {
      if (j == k) continue;
      Monomial mj = lead(g.elements[j], g.order).mon;
      if (mono_divides(mj, mk) && (mj != mk || j < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(g.elements[k]);
  }
  GBasis<F> out{{}, g.order};
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<MultiPoly<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != k) others.push_back(minimal[j]);
    MultiPoly<F> r = normal_form(minimal[k], others, g.order);
    r *= lead(r, g.order).coeff.inverse();
    out.elements.push_back(std::move(r));
  }
  std::sort(out.elements.begin(), out.elements.end(), [&](const MultiPoly<F>& a, const MultiPoly<F>& b) {
    return mono_less(lead(a, g.order).mon, lead(b, g.order).mon, g.order);
  });
  return out;
}

}  // namespace valrel
