#pragma once

#include "valrel/budget.hpp"
#include "valrel/coordinates.hpp"
#include "valrel/groebner.hpp"

#include <vector>

namespace valrel {

/// Result of the W-tracking Buchberger run over K(z).
struct SpecReport {
  /// Monic; every alpha with a nonzero value-relation ideal is a root
  /// (when `valid_certificate`).
  UniPoly w_end;
  GBasis<RatFunc> basis;
  /// Basis elements involving only T_1..T_p.
  std::vector<KzPoly> elim_part;
  /// elim_part rewritten in Y_1..Y_p.
  std::vector<KzPoly> functional_relations;
  /// False when elim_part is nonempty: the exceptional-locus precondition
  /// fails and w_end certifies nothing.
  bool valid_certificate = true;
  /// True only for the elim-standard order; under paper-literal the
  /// certificate property is not guaranteed.
  bool order_guaranteed = true;
  OrderMode mode = OrderMode::ElimStandard;
  BuchbergerTrace trace;
};

/// The exceptional-locus computation: Buchberger over K(z) in the order
/// OrderSpec{p, mode}, with W := lcm(W, num(lc(.))) at each generator, each
/// pair difference, each nonzero S-polynomial and each nonzero intermediate
/// remainder; then one coefficient numerator per basis element that involves
/// T_{p+1..N}. Throws InputError when a generator has a denominator factor
/// not dividing W_0.
SpecReport algorithm2(const std::vector<KzPoly>& gens, std::size_t p, std::size_t n, const UniPoly& w0,
                      OrderMode mode, StepBudget* budget = nullptr);

/// Relations R(Y_1..Y_p) over K(z) with R(phi_1..phi_p) in the ideal, as a
/// Gröbner basis of the elimination ideal (elim-standard order). Empty means
/// the phi_j are algebraically independent modulo the ideal.
std::vector<KzPoly> functional_relations(const LinearFormSet& forms, const std::vector<KzPoly>& ideal,
                                         StepBudget* budget = nullptr);

/// Runs build_frame, rewrite_in_T and algorithm2.
SpecReport exceptional_polynomial(const LinearFormSet& forms, const std::vector<KzPoly>& ideal, OrderMode mode,
                                  StepBudget* budget = nullptr);

}  // namespace valrel
