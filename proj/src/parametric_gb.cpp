#include "valrel/parametric_gb.hpp"

namespace valrel {

namespace {

// Squarefree parts of a monic polynomial with their multiplicities (Yun).
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& a) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly c = upoly_gcd(a, a.derivative());
  UniPoly w = a.exact_div(c);
  for (unsigned i = 1; !w.is_constant(); ++i) {
    UniPoly y = upoly_gcd(w, c);
    UniPoly z = w.exact_div(y);
    if (!z.is_constant()) out.emplace_back(std::move(z), i);
    w = std::move(y);
    c = c.exact_div(w);
  }
  return out;
}

// W as a product of pairwise coprime squarefree factors, so that taking the
// lcm with a new factor only needs gcds of small polynomials.
class WTracker : public BuchbergerObserver<RatFunc> {
 public:
  explicit WTracker(const UniPoly& w0) { absorb(w0); }

  void absorb(const UniPoly& factor) {
    if (factor.is_constant()) return;
    for (auto& [s, m] : squarefree_decomposition(factor.monic())) {
      std::vector<std::pair<UniPoly, unsigned>> next;
      for (auto& [f, e] : base_) {
        if (s.is_constant()) {
          next.emplace_back(std::move(f), e);
          continue;
        }
        UniPoly g = upoly_gcd(f, s);
        if (g.is_constant()) {
          next.emplace_back(std::move(f), e);
          continue;
        }
        UniPoly rest = f.exact_div(g);
        if (!rest.is_constant()) next.emplace_back(std::move(rest), e);
        s = s.exact_div(g);
        next.emplace_back(std::move(g), std::max(e, m));
      }
      if (!s.is_constant()) next.emplace_back(std::move(s), m);
      base_ = std::move(next);
    }
  }
  void absorb_lead(const KzPoly& p) { absorb(num_of(lead(p, order_).coeff)); }

  void on_generator(const KzPoly& p) override { absorb_lead(p); }
  void on_pair_difference(const KzPoly& d) override { absorb_lead(d); }
  void on_spoly(const KzPoly& s) override { absorb_lead(s); }
  void on_reduction_step(const KzPoly& s) override { absorb_lead(s); }

  void set_order(const OrderSpec& ord) { order_ = ord; }
  UniPoly value() const {
    UniPoly w(1);
    for (const auto& [f, e] : base_)
      for (unsigned k = 0; k < e; ++k) w *= f;
    return w;
  }

 private:
  std::vector<std::pair<UniPoly, unsigned>> base_;
  OrderSpec order_;
};

// Among terms involving T_{p+1..N}, the coefficient whose numerator has the
// least degree; ties go to the larger monomial.
const RatFunc& witness_coefficient(const KzPoly& p, std::size_t keep, const OrderSpec& ord) {
  const Monomial* best_mon = nullptr;
  const RatFunc* best = nullptr;
  for (const auto& [mon, coef] : p.terms()) {
    if (mon.degree_in(keep, mon.size()) == 0) continue;
    if (best == nullptr || coef.numer().degree() < best->numer().degree() ||
        (coef.numer().degree() == best->numer().degree() && mono_less(*best_mon, mon, ord))) {
      best = &coef;
      best_mon = &mon;
    }
  }
  return *best;
}

}  // namespace

SpecReport algorithm2(const std::vector<KzPoly>& gens, std::size_t p, std::size_t n, const UniPoly& w0,
                      OrderMode mode, StepBudget* budget) {
  if (w0.is_zero()) throw InputError("W0 must be nonzero");
  if (p < 1 || p > n) throw InputError("need 1 <= p <= N");
  for (const auto& g : gens) {
    if (g.num_vars() != n) throw InputError("generator variable count differs from N");
    for (const auto& [mon, coef] : g.terms())
      if (!divides_power_of(coef.denom(), w0))
        throw InputError("generator coefficient " + coef.to_string() + " has a denominator not dividing a power of W0");
  }

  const OrderSpec ord{p, mode};
  WTracker tracker(w0);
  tracker.set_order(ord);

  SpecReport report;
  report.mode = mode;
  report.order_guaranteed = mode == OrderMode::ElimStandard;
  report.basis = buchberger(gens, ord, BuchbergerOptions{budget, &report.trace}, &tracker);

  for (const auto& g : report.basis.elements) {
    if (g.depends_only_on_first(p)) {
      report.elim_part.push_back(g);
      report.functional_relations.push_back(with_num_vars(g, p));
      continue;
    }
    tracker.absorb(num_of(witness_coefficient(g, p, ord)));
  }
  report.valid_certificate = report.elim_part.empty();
  report.w_end = tracker.value();
  return report;
}

std::vector<KzPoly> functional_relations(const LinearFormSet& forms, const std::vector<KzPoly>& ideal,
                                         StepBudget* budget) {
  TFrame frame = build_frame(forms);
  std::vector<KzPoly> in_t;
  for (const auto& g : ideal) in_t.push_back(rewrite_in_T(g, frame));
  auto elim = elim_intersection(in_t, forms.num_forms(), OrderMode::ElimStandard, BuchbergerOptions{budget, nullptr});
  std::vector<KzPoly> out;
  for (const auto& r : elim.polys) out.push_back(with_num_vars(r, forms.num_forms()));
  return out;
}

SpecReport exceptional_polynomial(const LinearFormSet& forms, const std::vector<KzPoly>& ideal, OrderMode mode,
                                  StepBudget* budget) {
  TFrame frame = build_frame(forms);
  std::vector<KzPoly> in_t;
  for (const auto& g : ideal) {
    if (g.num_vars() != forms.num_vars()) throw InputError("ideal generator variable count differs from N");
    in_t.push_back(rewrite_in_T(g, frame));
  }
  return algorithm2(in_t, forms.num_forms(), forms.num_vars(), frame.w0, mode, budget);
}

}  // namespace valrel
