#pragma once

#include "valrel/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace valrel {

/// Dense univariate polynomial in z over Q(i). Coefficient k is the
/// coefficient of z^k; no trailing zeros are stored.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  UniPoly(Scalar c);  // NOLINT(google-explicit-constructor)
  UniPoly(long c) : UniPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Scalar> coeffs);

  /// The monomial c*z^k.
  static UniPoly monomial(Scalar c, int k);
  /// z - root.
  static UniPoly linear(const Scalar& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int k) const;
  Scalar leading_coeff() const;

  UniPoly monic() const;
  UniPoly derivative() const;
  Scalar eval(const Scalar& x) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Scalar& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Scalar& c) { return a *= c; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Euclidean division; throws MathError when the divisor is zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  /// Exact quotient; throws MathError if d does not divide *this.
  UniPoly exact_div(const UniPoly& d) const;
  bool divides(const UniPoly& m) const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Monic gcd. Throws MathError("gcd of two zeros") if both inputs vanish.
UniPoly upoly_gcd(const UniPoly& a, const UniPoly& b);
/// Monic lcm of two nonzero polynomials.
UniPoly upoly_lcm_monic(const UniPoly& a, const UniPoly& b);
/// a / gcd(a, a'), made monic.
UniPoly squarefree_part(const UniPoly& a);
/// True when every irreducible factor of d divides w, i.e. d | w^k for some k.
bool divides_power_of(const UniPoly& d, const UniPoly& w);

}  // namespace valrel
