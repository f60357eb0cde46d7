#pragma once

#include "valrel/budget.hpp"
#include "valrel/coordinates.hpp"
#include "valrel/parametric_gb.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace valrel {

/// Generators of J_alpha = chi_alpha^{-1}(I_alpha) in Y_1..Y_p over K.
struct ValueRelationIdeal {
  Scalar alpha;
  std::size_t rank = 0;
  /// Elimination part, pulled back along T_t -> Y_{j_t}.
  std::vector<KPoly> b1;
  /// Kernel of chi_alpha: Y_j - sum_t lambda_{j,t} Y_{j_t}.
  std::vector<KPoly> b2;
  bool is_zero_ideal = true;

  std::vector<KPoly> generators() const;
  /// Reduced Gröbner basis of J_alpha (lex, Y_1 > ... > Y_p), monic.
  std::vector<KPoly> canonical_generators() const;
};

struct UnresolvedFactor {
  UniPoly factor;
  /// Decimal approximations of its roots, e.g. "1.41421356237309504880".
  std::vector<std::string> approximations;
};

struct RootReport {
  std::vector<Scalar> verified_roots;
  /// Multiplicity of each verified root in W.
  std::vector<unsigned> multiplicities;
  std::vector<UnresolvedFactor> unresolved_factors;
};

/// Raised when the functions satisfy a polynomial relation over K(z), so that
/// the exceptional set is undefined (every point is exceptional).
class FunctionsDependent : public std::runtime_error {
 public:
  explicit FunctionsDependent(std::vector<KzPoly> relations)
      : std::runtime_error("functions algebraically dependent: the exceptional set is empty"),
        relations_(std::move(relations)) {}
  const std::vector<KzPoly>& relations() const { return relations_; }

 private:
  std::vector<KzPoly> relations_;
};

/// S(phi_1(alpha, X), ..., phi_p(alpha, X)).
KPoly chi_substitute(const KPoly& s, const LinearFormSet& forms, const Scalar& alpha);

/// Q(alpha, X) for every generator; zero results are dropped.
std::vector<KPoly> ideal_at_alpha(const std::vector<KzPoly>& ideal, const Scalar& alpha);

/// Generators of J_alpha. No independence hypothesis is needed.
ValueRelationIdeal j_alpha_generators(const LinearFormSet& forms, const std::vector<KzPoly>& ideal,
                                      const Scalar& alpha, StepBudget* budget = nullptr);

/// Exact roots of W lying in the working field. Approximations come from
/// simultaneous (Durand-Kerner) iteration at `precision_bits`; each is
/// rounded to a Gaussian rational with parts bounded by `denom_bound` and
/// kept only if W vanishes there exactly. Throws MathError when the
/// precision cannot separate the roots.
RootReport find_roots(const UniPoly& w, long denom_bound = 1'000'000, unsigned precision_bits = 256,
                      Field field = Field::Qi);

struct ExceptionalOptions {
  OrderMode mode = OrderMode::ElimStandard;
  long denom_bound = 1'000'000;
  unsigned precision_bits = 256;
  Field field = Field::Qi;
  StepBudget* budget = nullptr;
};

struct ExceptionalReport {
  SpecReport spec;
  RootReport roots;
  /// J_alpha at every verified root of W, in root order.
  std::vector<ValueRelationIdeal> points;

  /// Points with J_alpha != {0}.
  std::vector<ValueRelationIdeal> exceptional() const;
};

/// Full pipeline: independence check, W, roots of W, J_alpha at each root.
/// Throws FunctionsDependent when functional relations exist.
ExceptionalReport exceptional_set(const LinearFormSet& forms, const std::vector<KzPoly>& ideal,
                                  const ExceptionalOptions& opts = {});

}  // namespace valrel
