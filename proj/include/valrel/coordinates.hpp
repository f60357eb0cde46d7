#pragma once

#include "valrel/linalg.hpp"
#include "valrel/mpoly.hpp"
#include "valrel/ratfunc.hpp"

#include <map>
#include <vector>

namespace valrel {

/// Linear forms phi_j(z, X) = sum_k m[j][k](z) X_k, j < p, k < N.
/// Indices are 0-based in the API and 1-based in printed output.
class LinearFormSet {
 public:
  LinearFormSet() = default;
  /// Throws InputError on ragged rows, p = 0 or p > N.
  explicit LinearFormSet(std::vector<std::vector<UniPoly>> m);

  std::size_t num_forms() const { return m_.size(); }
  std::size_t num_vars() const { return m_.empty() ? 0 : m_.front().size(); }
  const std::vector<std::vector<UniPoly>>& matrix() const { return m_; }
  const UniPoly& entry(std::size_t j, std::size_t k) const { return m_[j][k]; }

  /// phi_j as a polynomial in X over K(z).
  KzPoly form(std::size_t j) const;
  /// M_0(alpha).
  Matrix<Scalar> at(const Scalar& alpha) const;
  /// phi_j(alpha, X).
  KPoly form_at(std::size_t j, const Scalar& alpha) const;

 private:
  std::vector<std::vector<UniPoly>> m_;
};

/// Generic coordinates T_1..T_N over K(z): T_j = phi_j for j <= p,
/// then T_{p+s} = X_{excluded[s]}.
struct TFrame {
  /// Monic p x p minor of M_0 with lexicographically least excluded columns.
  UniPoly w0;
  std::vector<std::size_t> excluded;
  /// Row i: X_i = sum_k x_in_t[i][k] T_k. W_0 clears every denominator.
  Matrix<RatFunc> x_in_t;
  /// Row k: T_k = sum_i t_in_x[k][i] X_i.
  Matrix<RatFunc> t_in_x;
};

/// Throws InputError("forms not independent") when rank M_0 < p.
TFrame build_frame(const LinearFormSet& forms);

/// X_i -> sum_k lambda_{i,k}(z) T_k.
KzPoly rewrite_in_T(const KzPoly& p, const TFrame& frame);
/// T_k -> sum_i t_in_x[k][i] X_i (inverse of rewrite_in_T).
KzPoly rewrite_in_X(const KzPoly& p, const TFrame& frame);

/// Coordinates at a point: T_t = phi_{j_t}(alpha, X) for t < r, then
/// T_{r+s} = X_{i_s}; the tuple (i..., j...) is lexicographically least.
struct AlphaFrame {
  std::size_t rank = 0;
  std::vector<std::size_t> j_tuple;
  std::vector<std::size_t> i_tuple;
  /// For each j outside j_tuple: phi_j(alpha) = sum_t kernel[j][t] phi_{j_t}(alpha).
  std::map<std::size_t, std::vector<Scalar>> kernel;
  Matrix<Scalar> x_in_t;
  Matrix<Scalar> t_in_x;
};

AlphaFrame specialize_forms(const LinearFormSet& forms, const Scalar& alpha);

/// X_i -> sum_k x_in_t[i][k] T_k over K.
KPoly rewrite_in_T(const KPoly& p, const AlphaFrame& frame);

}  // namespace valrel
