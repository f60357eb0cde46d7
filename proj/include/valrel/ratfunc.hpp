#pragma once

#include "valrel/upoly.hpp"

#include <string>

namespace valrel {

/// Element of K(z) kept in lowest terms with a monic denominator, so that
/// structural equality is field equality.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}                       // NOLINT(google-explicit-constructor)
  RatFunc(Scalar c) : num_(std::move(c)), den_(1) {}          // NOLINT(google-explicit-constructor)
  RatFunc(UniPoly p) : num_(std::move(p)), den_(1) {}         // NOLINT(google-explicit-constructor)
  RatFunc(UniPoly n, UniPoly d);

  const UniPoly& numer() const { return num_; }
  const UniPoly& denom() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == UniPoly(1); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc inverse() const;
  Scalar eval(const Scalar& at) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  std::string to_string(const std::string& var = "z") const;
  /// Scalar or rational-function coefficient text for printed sums.
  friend std::pair<bool, std::string> coeff_text(const RatFunc& c, bool before_monomial);

 private:
  UniPoly num_;
  UniPoly den_;
};

/// Normalized n/d; throws MathError on d = 0.
RatFunc ratfunc_normalize(const UniPoly& n, const UniPoly& d);
/// Numerator of the normalized form; throws MathError("num of zero").
UniPoly num_of(const RatFunc& r);
UniPoly denom_of(const RatFunc& r);

Scalar eval_at(const UniPoly& f, const Scalar& at);
/// Throws MathError when the denominator vanishes at `at`.
Scalar eval_at(const RatFunc& f, const Scalar& at);

}  // namespace valrel
