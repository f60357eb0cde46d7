#include "valrel/value_relations.hpp"

#include "valrel/groebner.hpp"

namespace valrel {

std::vector<KPoly> ValueRelationIdeal::generators() const {
  std::vector<KPoly> out = b1;
  out.insert(out.end(), b2.begin(), b2.end());
  return out;
}

std::vector<KPoly> ValueRelationIdeal::canonical_generators() const {
  std::vector<KPoly> gens = generators();
  if (gens.empty()) return {};
  const std::size_t p = gens.front().num_vars();
  return canonical_basis(buchberger(gens, OrderSpec{p, OrderMode::ElimStandard})).elements;
}

KPoly chi_substitute(const KPoly& s, const LinearFormSet& forms, const Scalar& alpha) {
  if (s.num_vars() != forms.num_forms()) throw std::invalid_argument("relation must live in Y_1..Y_p");
  std::vector<KPoly> images;
  for (std::size_t j = 0; j < forms.num_forms(); ++j) images.push_back(forms.form_at(j, alpha));
  return substitute(s, images, forms.num_vars());
}

std::vector<KPoly> ideal_at_alpha(const std::vector<KzPoly>& ideal, const Scalar& alpha) {
  std::vector<KPoly> out;
  for (const auto& q : ideal) {
    KPoly qa = specialize(q, alpha);
    if (!qa.is_zero()) out.push_back(std::move(qa));
  }
  return out;
}

ValueRelationIdeal j_alpha_generators(const LinearFormSet& forms, const std::vector<KzPoly>& ideal,
                                      const Scalar& alpha, StepBudget* budget) {
  const std::size_t p = forms.num_forms();
  const std::size_t n = forms.num_vars();
  AlphaFrame frame = specialize_forms(forms, alpha);
  const std::size_t r = frame.rank;

  std::vector<KPoly> in_t;
  for (const auto& q : ideal_at_alpha(ideal, alpha)) in_t.push_back(rewrite_in_T(q, frame));

  ValueRelationIdeal out;
  out.alpha = alpha;
  out.rank = r;

  if (r == 0) {
    // Im(chi) = K: the intersection is nonzero exactly for the unit ideal.
    GBasis<Scalar> g = buchberger(in_t, OrderSpec{n, OrderMode::ElimStandard}, BuchbergerOptions{budget, nullptr});
    if (reduce_to_zero(KPoly::constant(n, Scalar(1)), g)) out.b1.push_back(KPoly::constant(p, Scalar(1)));
  } else {
    auto elim = elim_intersection(in_t, r, OrderMode::ElimStandard, BuchbergerOptions{budget, nullptr});
    for (const auto& h : elim.polys) {
      KPoly y(p);
      for (const auto& [mon, coef] : h.terms()) {
        Monomial m(p);
        for (std::size_t t = 0; t < r; ++t) m[frame.j_tuple[t]] = mon[t];
        y.add_term(m, coef);
      }
      out.b1.push_back(std::move(y));
    }
  }

  for (const auto& [j, lambda] : frame.kernel) {
    KPoly rel = KPoly::variable(p, j);
    for (std::size_t t = 0; t < r; ++t) rel.add_term(Monomial::variable(p, frame.j_tuple[t]), -lambda[t]);
    out.b2.push_back(std::move(rel));
  }
  out.is_zero_ideal = out.b1.empty() && out.b2.empty();
  return out;
}

std::vector<ValueRelationIdeal> ExceptionalReport::exceptional() const {
  std::vector<ValueRelationIdeal> out;
  for (const auto& pt : points)
    if (!pt.is_zero_ideal) out.push_back(pt);
  return out;
}

ExceptionalReport exceptional_set(const LinearFormSet& forms, const std::vector<KzPoly>& ideal,
                                  const ExceptionalOptions& opts) {
  std::vector<KzPoly> relations = functional_relations(forms, ideal, opts.budget);
  if (!relations.empty()) throw FunctionsDependent(std::move(relations));

  ExceptionalReport report;
  report.spec = exceptional_polynomial(forms, ideal, opts.mode, opts.budget);
  if (!report.spec.valid_certificate) throw FunctionsDependent(report.spec.functional_relations);
  report.roots = find_roots(report.spec.w_end, opts.denom_bound, opts.precision_bits, opts.field);
  for (const auto& alpha : report.roots.verified_roots)
    report.points.push_back(j_alpha_generators(forms, ideal, alpha, opts.budget));
  return report;
}

}  // namespace valrel
