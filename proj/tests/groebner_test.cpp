#include "valrel/groebner.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace valrel;
using support::MacaulaySpace;

namespace {

KPoly T(std::size_t n, std::size_t k) { return KPoly::variable(n, k); }

// T1^2 - T2, T2^2
std::vector<KPoly> counterexample_ideal() { return {T(2, 0) * T(2, 0) - T(2, 1), T(2, 1) * T(2, 1)}; }

KPoly t1_fourth() { return KPoly::term(Scalar(1), Monomial{4, 0}); }

std::vector<KPoly> random_ideal(support::Rng& rng, std::size_t n, int gens, int terms, int degree) {
  std::vector<KPoly> out;
  while (static_cast<int>(out.size()) < gens) {
    KPoly g = rng.kpoly(n, rng.uniform(2, terms), degree);
    if (!g.is_zero() && g.total_degree() > 0) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST(Buchberger, CounterexampleUnderPaperLiteral) {
  auto r = elim_intersection(counterexample_ideal(), 1, OrderMode::PaperLiteral);
  EXPECT_TRUE(r.polys.empty());
  EXPECT_FALSE(r.guaranteed);
  EXPECT_EQ(r.basis.elements, counterexample_ideal());
  EXPECT_TRUE(reduce_to_zero(t1_fourth(), r.basis));
}

TEST(Buchberger, CounterexampleUnderElimStandard) {
  auto r = elim_intersection(counterexample_ideal(), 1, OrderMode::ElimStandard);
  ASSERT_EQ(r.basis.elements.size(), 3u);
  EXPECT_EQ(r.basis.elements[2], t1_fourth());
  ASSERT_EQ(r.polys.size(), 1u);
  EXPECT_EQ(r.polys[0], t1_fourth());
  EXPECT_TRUE(r.guaranteed);
}

TEST(Buchberger, TraceOfCounterexampleRun) {
  BuchbergerTrace tr;
  buchberger(counterexample_ideal(), OrderSpec{1, OrderMode::ElimStandard}, BuchbergerOptions{nullptr, &tr});
  ASSERT_EQ(tr.rounds.size(), 2u);
  ASSERT_EQ(tr.rounds[0].size(), 1u);
  const PairRecord& rec = tr.rounds[0][0];
  EXPECT_EQ(rec.spoly_lead, (Monomial{2, 1}));
  EXPECT_EQ(rec.remainder_lead, (Monomial{4, 0}));
  // second round: three pairs, nothing new
  EXPECT_EQ(tr.rounds[1].size(), 3u);
  for (const auto& p : tr.rounds[1]) EXPECT_FALSE(p.remainder_lead.has_value());
}

TEST(Buchberger, EqualPairsAreSkipped) {
  KPoly g = T(2, 0) - T(2, 1);
  BuchbergerTrace tr;
  auto gb = buchberger(std::vector<KPoly>{g, g}, OrderSpec{1, OrderMode::ElimStandard}, BuchbergerOptions{nullptr, &tr});
  EXPECT_EQ(gb.elements.size(), 2u);
  ASSERT_EQ(tr.rounds.size(), 1u);
  EXPECT_TRUE(tr.rounds[0][0].equal);
}

TEST(Buchberger, ZeroInputsAreDropped) {
  auto gb = buchberger(std::vector<KPoly>{KPoly(2), T(2, 0)}, OrderSpec{1, OrderMode::ElimStandard});
  EXPECT_EQ(gb.elements.size(), 1u);
  EXPECT_TRUE(buchberger(std::vector<KPoly>{}, OrderSpec{1, OrderMode::ElimStandard}).elements.empty());
}

TEST(Buchberger, BudgetExceededReportsPartialBasis) {
  support::Rng rng(51);
  StepBudget budget(3);
  auto gens = random_ideal(rng, 3, 3, 3, 3);
  try {
    buchberger(gens, OrderSpec{1, OrderMode::ElimStandard}, BuchbergerOptions{&budget, nullptr});
    FAIL() << "expected the budget to run out";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.limit(), 3u);
    EXPECT_GE(e.partial_basis_size(), gens.size());
  }
}

TEST(Buchberger, CanonicalBasisOfCounterexampleIdeal) {
  auto gb = canonical_basis(buchberger(counterexample_ideal(), OrderSpec{1, OrderMode::ElimStandard}));
  ASSERT_EQ(gb.elements.size(), 2u);
  EXPECT_EQ(gb.elements[0], t1_fourth());
  EXPECT_EQ(gb.elements[1], T(2, 1) - T(2, 0) * T(2, 0));
}

TEST(Buchberger, UnitIdeal) {
  auto gb = buchberger(std::vector<KPoly>{T(2, 0), T(2, 0) - KPoly::constant(2, 1)}, OrderSpec{2, OrderMode::ElimStandard});
  EXPECT_TRUE(reduce_to_zero(KPoly::constant(2, 1), gb));
  auto c = canonical_basis(gb);
  ASSERT_EQ(c.elements.size(), 1u);
  EXPECT_EQ(c.elements[0], KPoly::constant(2, 1));
}

TEST(Buchberger, KnownBasisOverRationalFunctions) {
  // (z T1 - T2, T1^2) in lex: S-polynomial gives T1 T2 / ... and then T2^2
  UniPoly z = UniPoly::monomial(Scalar(1), 1);
  KzPoly a = KzPoly::term(RatFunc(z), Monomial{1, 0}) - KzPoly::variable(2, 1);
  KzPoly b = KzPoly::term(RatFunc(1), Monomial{2, 0});
  auto gb = canonical_basis(buchberger(std::vector<KzPoly>{a, b}, OrderSpec{2, OrderMode::ElimStandard}));
  ASSERT_EQ(gb.elements.size(), 2u);
  EXPECT_EQ(gb.elements[0], KzPoly::term(RatFunc(1), Monomial{0, 2}));
  EXPECT_EQ(gb.elements[1], KzPoly::variable(2, 0) - KzPoly::term(RatFunc(UniPoly(1), z), Monomial{0, 1}));
}

class GroebnerProperty : public ::testing::TestWithParam<OrderMode> {};

TEST_P(GroebnerProperty, CriterionAndStability) {
  support::Rng rng(52 + static_cast<int>(GetParam()));
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const OrderSpec ord{static_cast<std::size_t>(rng.uniform(1, static_cast<int>(n))), GetParam()};
    auto gens = random_ideal(rng, n, rng.uniform(1, 3), 3, 2);
    StepBudget budget(20000);
    GBasis<Scalar> gb;
    try {
      gb = buchberger(gens, ord, BuchbergerOptions{&budget, nullptr});
    } catch (const BudgetExceeded&) {
      continue;
    }
    ++checked;
    EXPECT_TRUE(satisfies_buchberger_criterion(gb));
    for (const auto& g : gens) EXPECT_TRUE(reduce_to_zero(g, gb));

    // any ideal element appended keeps the criterion
    KPoly extra(n);
    for (const auto& g : gb.elements) extra += g * rng.kpoly(n, 2, 1);
    if (extra.is_zero()) continue;
    GBasis<Scalar> bigger = gb;
    bigger.elements.push_back(extra);
    EXPECT_TRUE(satisfies_buchberger_criterion(bigger));
    EXPECT_TRUE(reduce_to_zero(extra, gb));
  }
  EXPECT_GE(checked, 40);
}

TEST_P(GroebnerProperty, MembershipAgreesWithLinearAlgebra) {
  support::Rng rng(54 + static_cast<int>(GetParam()));
  for (int it = 0; it < 15; ++it) {
    const std::size_t n = 2;
    const OrderSpec ord{static_cast<std::size_t>(rng.uniform(1, 2)), GetParam()};
    auto gens = random_ideal(rng, n, 2, 3, 2);
    auto gb = buchberger(gens, ord);
    MacaulaySpace span(gens, n, 5);
    for (int k = 0; k < 10; ++k) {
      KPoly f = rng.kpoly(n, 3, 3);
      // linear-algebra membership at degree 5 implies ideal membership
      if (span.contains(f)) EXPECT_TRUE(reduce_to_zero(f, gb));
      KPoly member = gens[0] * rng.kpoly(n, 2, 1) + gens[1] * rng.kpoly(n, 2, 1);
      EXPECT_TRUE(span.contains(member));
      EXPECT_TRUE(reduce_to_zero(member, gb));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(BothModes, GroebnerProperty,
                         ::testing::Values(OrderMode::ElimStandard, OrderMode::PaperLiteral),
                         [](const auto& info) { return info.param == OrderMode::ElimStandard ? "ElimStandard" : "PaperLiteral"; });

TEST(EliminationProperty, MatchesLinearAlgebraOracle) {
  // Oracle: elements of the ideal in T_1..T_keep of degree <= 3, found as the
  // kernel of the Macaulay residue map. Each must reduce to zero by H, and
  // each element of H must lie in the ideal.
  support::Rng rng(55);
  int nontrivial = 0;
  for (int it = 0; it < 20; ++it) {
    const std::size_t n = 3;
    const std::size_t keep = static_cast<std::size_t>(rng.uniform(1, 2));
    auto gens = random_ideal(rng, n, 2, 3, 2);
    StepBudget budget(50000);
    EliminationResult<Scalar> elim;
    try {
      elim = elim_intersection(gens, keep, OrderMode::ElimStandard, BuchbergerOptions{&budget, nullptr});
    } catch (const BudgetExceeded&) {
      continue;
    }
    MacaulaySpace span(gens, n, 6);
    std::vector<KPoly> candidates;
    for (const auto& m : support::monomials_up_to(keep, 3)) {
      std::vector<std::uint32_t> e(n, 0);
      for (std::size_t k = 0; k < keep; ++k) e[k] = m[k];
      candidates.push_back(KPoly::term(Scalar(1), Monomial(e)));
    }
    GBasis<Scalar> h{elim.polys, OrderSpec{keep, OrderMode::ElimStandard}};
    for (const auto& s : span.kernel(candidates, candidates)) {
      ++nontrivial;
      EXPECT_TRUE(reduce_to_zero(s, h)) << s.to_string();
    }
    auto graded = buchberger(gens, support::deglex(n));
    for (const auto& p : elim.polys) {
      EXPECT_TRUE(p.depends_only_on_first(keep));
      EXPECT_TRUE(normal_form(p, graded.elements, graded.order).is_zero()) << p.to_string();
    }
  }
  EXPECT_GT(nontrivial, 0);
}
