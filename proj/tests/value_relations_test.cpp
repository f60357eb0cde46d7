#include "valrel/value_relations.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace valrel;
using support::MacaulaySpace;

namespace {

const UniPoly z = UniPoly::monomial(Scalar(1), 1);

LinearFormSet example1_forms() {
  return LinearFormSet({{(z - UniPoly(1)) * (z - UniPoly(1)), UniPoly(1)},
                        {z * z - UniPoly(1), UniPoly(-Scalar::i())}});
}

LinearFormSet example2_forms() {
  return LinearFormSet({{UniPoly(1), UniPoly(), UniPoly()}, {UniPoly(), UniPoly(1), UniPoly()}});
}

KzPoly example2_generator() {
  KzPoly q(3);
  q.add_term(Monomial{2, 0, 0}, RatFunc(UniPoly(1) + z * z * Scalar(36)));
  q.add_term(Monomial{0, 2, 0}, RatFunc(UniPoly(Scalar::rational(-1, 4))));
  q.add_term(Monomial{1, 0, 1}, RatFunc(z * z * Scalar(-18)));
  q.add_term(Monomial{0, 0, 2}, RatFunc(z * z * Scalar::rational(9, 4)));
  q.add_term(Monomial{0, 0, 0}, RatFunc(UniPoly(-1)));
  return q;
}

KPoly Y(std::size_t p, std::size_t k) { return KPoly::variable(p, k); }

}  // namespace

TEST(JAlpha, FirstExampleAtItsRoots) {
  const KPoly expected = Y(2, 0) * Scalar::i() + Y(2, 1);
  for (const Scalar& alpha : {Scalar(1), Scalar::i()}) {
    ValueRelationIdeal j = j_alpha_generators(example1_forms(), {}, alpha);
    EXPECT_FALSE(j.is_zero_ideal);
    EXPECT_TRUE(j.b1.empty());
    ASSERT_EQ(j.generators().size(), 1u);
    EXPECT_EQ(j.generators()[0], expected);
    EXPECT_EQ(j.generators()[0].to_string("Y"), "i*Y1 + Y2");
  }
}

TEST(JAlpha, FirstExampleAwayFromRoots) {
  support::Rng rng(81);
  for (int it = 0; it < 20; ++it) {
    Scalar alpha = rng.scalar();
    if (alpha == Scalar(1) || alpha == Scalar::i()) continue;
    EXPECT_TRUE(j_alpha_generators(example1_forms(), {}, alpha).is_zero_ideal);
  }
}

TEST(JAlpha, SecondExampleAtPlusMinusISixth) {
  for (int sign : {1, -1}) {
    Scalar alpha(0, mpq_class(sign, 6));
    KPoly qa = specialize(example2_generator(), alpha);
    // -1/4 X2^2 + 1/2 X1 X3 - 1/16 X3^2 - 1
    KPoly expected(3);
    expected.add_term(Monomial{0, 2, 0}, Scalar::rational(-1, 4));
    expected.add_term(Monomial{1, 0, 1}, Scalar::rational(1, 2));
    expected.add_term(Monomial{0, 0, 2}, Scalar::rational(-1, 16));
    expected.add_term(Monomial{0, 0, 0}, Scalar(-1));
    EXPECT_EQ(qa, expected);
    EXPECT_TRUE(j_alpha_generators(example2_forms(), {example2_generator()}, alpha).is_zero_ideal);
  }
}

TEST(JAlpha, SecondExampleAtZeroHasTheFirstIntegral) {
  ValueRelationIdeal j = j_alpha_generators(example2_forms(), {example2_generator()}, Scalar(0));
  ASSERT_EQ(j.b1.size(), 1u);
  EXPECT_EQ(j.b1[0].to_string("Y"), "Y1^2 - 1/4*Y2^2 - 1");
  EXPECT_TRUE(j.b2.empty());
}

TEST(JAlpha, RankZeroPoint) {
  LinearFormSet forms({{z, UniPoly()}});
  // I = (X1 - 1): the forms vanish at 0 but the ideal is proper, so J = {0}
  KzPoly g = KzPoly::variable(2, 0) - KzPoly::constant(2, RatFunc(1));
  ValueRelationIdeal j = j_alpha_generators(forms, {g}, Scalar(0));
  EXPECT_EQ(j.rank, 0u);
  ASSERT_EQ(j.b2.size(), 1u);
  EXPECT_EQ(j.b2[0], Y(1, 0));
  // the unit ideal pulls back to everything
  ValueRelationIdeal unit = j_alpha_generators(forms, {KzPoly::constant(2, RatFunc(z - UniPoly(1)))}, Scalar(0));
  EXPECT_EQ(unit.b1.size(), 1u);
  EXPECT_EQ(unit.b1[0], KPoly::constant(1, Scalar(1)));
}

TEST(JAlpha, CanonicalGenerators) {
  ValueRelationIdeal j = j_alpha_generators(example1_forms(), {}, Scalar(1));
  auto c = j.canonical_generators();
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], Y(2, 0) - Y(2, 1) * Scalar::i());
}

TEST(ChiSubstitute, MapsRelationsIntoTheIdeal) {
  KPoly s = Y(2, 0) * Scalar::i() + Y(2, 1);
  EXPECT_TRUE(chi_substitute(s, example1_forms(), Scalar(1)).is_zero());
  EXPECT_TRUE(chi_substitute(s, example1_forms(), Scalar::i()).is_zero());
  EXPECT_FALSE(chi_substitute(s, example1_forms(), Scalar(2)).is_zero());
}

// Brute-force oracle: the relations of degree <= 4 are the kernel of
// S -> residue of S(phi(alpha, X)) modulo the degree-6 Macaulay span of I_alpha.
TEST(JAlphaProperty, AgreesWithLinearAlgebraOracle) {
  support::Rng rng(82);
  int instances = 0, nonzero = 0;
  while (instances < 25) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const std::size_t p = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(n)));
    const Scalar alpha0 = rng.scalar(Field::Qi, 2, 2);
    const UniPoly shift = UniPoly::linear(alpha0);

    std::vector<std::vector<UniPoly>> m(p, std::vector<UniPoly>(n));
    for (auto& row : m)
      for (auto& e : row) e = UniPoly(rng.scalar(Field::Qi, 2, 1)) + shift * rng.upoly(0);
    if (p > 1 && rng.coin()) {
      // make the last form a multiple of the first at alpha0
      Scalar c = rng.nonzero_scalar(Field::Qi, 2, 1);
      for (std::size_t k = 0; k < n; ++k) m[p - 1][k] = UniPoly(m[0][k].eval(alpha0) * c) + shift * rng.upoly(0);
    }
    LinearFormSet forms(m);

    std::vector<KzPoly> ideal;
    {
      KPoly s = rng.kpoly(p, 2, 2);
      std::vector<KzPoly> phi;
      for (std::size_t j = 0; j < p; ++j) phi.push_back(forms.form(j));
      KzPoly g = substitute(lift(s), phi, n) + lift(rng.kpoly(n, 2, 2)) * RatFunc(shift);
      if (!g.is_zero()) ideal.push_back(g);
      if (rng.coin(0.3)) ideal.push_back(rng.kzpoly(n, 2, 2, 1));
    }

    for (const Scalar& alpha : {alpha0, rng.scalar(Field::Qi, 3, 2)}) {
      StepBudget budget(50000);
      ValueRelationIdeal j;
      try {
        j = j_alpha_generators(forms, ideal, alpha, &budget);
      } catch (const BudgetExceeded&) {
        continue;
      }
      std::vector<KPoly> i_alpha = ideal_at_alpha(ideal, alpha);
      MacaulaySpace span(i_alpha, n, 6);
      auto candidates = support::monomial_polys(p, 4);
      std::vector<KPoly> images;
      for (const auto& c : candidates) images.push_back(chi_substitute(c, forms, alpha));

      GBasis<Scalar> jgb = buchberger(j.generators(), OrderSpec{p, OrderMode::ElimStandard});
      for (const auto& s : span.kernel(images, candidates))
        EXPECT_TRUE(reduce_to_zero(s, jgb)) << "oracle relation " << s.to_string("Y") << " missing";

      GBasis<Scalar> igb = buchberger(i_alpha, support::deglex(n));
      for (const auto& g : j.generators()) {
        KPoly image = chi_substitute(g, forms, alpha);
        bool in_ideal = image.total_degree() <= 6 ? span.contains(image) : false;
        if (!in_ideal) in_ideal = image.is_zero() || normal_form(image, igb.elements, igb.order).is_zero();
        EXPECT_TRUE(in_ideal) << "generator " << g.to_string("Y") << " not a relation";
      }
      if (!j.is_zero_ideal) ++nonzero;
    }
    ++instances;
  }
  EXPECT_GE(nonzero, 10);
}

TEST(FindRoots, FirstExample) {
  RootReport r = find_roots((z - UniPoly(1)) * (z - UniPoly(Scalar::i())));
  EXPECT_EQ(r.verified_roots, (std::vector<Scalar>{Scalar::i(), Scalar(1)}));
  EXPECT_EQ(r.multiplicities, (std::vector<unsigned>{1, 1}));
  EXPECT_TRUE(r.unresolved_factors.empty());
}

TEST(FindRoots, MultiplicitiesAndImaginaryRoots) {
  RootReport r = find_roots(z * z * (z * z + UniPoly(Scalar::rational(1, 36))));
  ASSERT_EQ(r.verified_roots.size(), 3u);
  EXPECT_EQ(r.verified_roots[0], Scalar(0, mpq_class(-1, 6)));
  EXPECT_EQ(r.verified_roots[1], Scalar(0));
  EXPECT_EQ(r.verified_roots[2], Scalar(0, mpq_class(1, 6)));
  EXPECT_EQ(r.multiplicities, (std::vector<unsigned>{1, 2, 1}));
}

TEST(FindRoots, IrrationalRootsStayUnresolved) {
  RootReport r = find_roots(z * z - UniPoly(2));
  EXPECT_TRUE(r.verified_roots.empty());
  ASSERT_EQ(r.unresolved_factors.size(), 1u);
  EXPECT_EQ(r.unresolved_factors[0].factor, z * z - UniPoly(2));
  ASSERT_EQ(r.unresolved_factors[0].approximations.size(), 2u);
  for (const auto& a : r.unresolved_factors[0].approximations) EXPECT_NE(a.find("1.4142135623730950488"), std::string::npos) << a;
}

TEST(FindRoots, FieldQKeepsOnlyRealRoots) {
  RootReport r = find_roots((z - UniPoly(3)) * (z * z + UniPoly(1)), 1'000'000, 256, Field::Q);
  EXPECT_EQ(r.verified_roots, std::vector<Scalar>{Scalar(3)});
  ASSERT_EQ(r.unresolved_factors.size(), 1u);
  EXPECT_EQ(r.unresolved_factors[0].factor, z * z + UniPoly(1));
}

TEST(FindRoots, DenominatorBound) {
  Scalar big(mpq_class(12345, 678));
  EXPECT_EQ(find_roots(UniPoly::linear(big) * (z - UniPoly(1))).verified_roots.size(), 2u);
  RootReport tight = find_roots(UniPoly::linear(big), 100);
  EXPECT_TRUE(tight.verified_roots.empty());
  EXPECT_EQ(tight.unresolved_factors.size(), 1u);
}

TEST(FindRoots, Degenerate) {
  EXPECT_THROW(find_roots(UniPoly()), MathError);
  EXPECT_TRUE(find_roots(UniPoly(7)).verified_roots.empty());
  EXPECT_THROW(find_roots(z, 10, 8), InputError);
}

TEST(ExceptionalSet, FirstExample) {
  ExceptionalReport rep = exceptional_set(example1_forms(), {});
  EXPECT_EQ(rep.spec.w_end, (z - UniPoly(1)) * (z - UniPoly(Scalar::i())));
  ASSERT_EQ(rep.points.size(), 2u);
  EXPECT_EQ(rep.exceptional().size(), 2u);
}

TEST(ExceptionalSet, DependentFunctionsThrow) {
  LinearFormSet forms({{UniPoly(1), UniPoly()}, {UniPoly(), UniPoly(1)}});
  KzPoly g = KzPoly::variable(2, 0) - KzPoly::term(RatFunc(z), Monomial{0, 1});
  try {
    exceptional_set(forms, {g});
    FAIL() << "expected FunctionsDependent";
  } catch (const FunctionsDependent& e) {
    EXPECT_EQ(e.relations().size(), 1u);
  }
}

TEST(ExceptionalSet, SoundnessOnSecondExample) {
  // every alpha off the roots of W has J_alpha = {0}
  ExceptionalReport rep = exceptional_set(example2_forms(), {example2_generator()});
  EXPECT_EQ(rep.spec.w_end, z * z);
  support::Rng rng(83);
  for (int it = 0; it < 30; ++it) {
    Scalar alpha = rng.nonzero_scalar();
    EXPECT_TRUE(j_alpha_generators(example2_forms(), {example2_generator()}, alpha).is_zero_ideal);
  }
}
