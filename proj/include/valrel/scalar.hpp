#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace valrel {

/// Raised for algebraically meaningless requests: division by zero,
/// evaluation at a pole, gcd of two zeros.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when user-supplied text or files violate the input format.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Field { Q, Qi };

/// Exact element of Q(i): re + im*i with both parts reduced rationals.
/// A rational number is simply a Scalar with zero imaginary part.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);

  static Scalar i() { return Scalar(0, 1); }
  static Scalar rational(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool belongs_to(Field f) const { return f == Field::Qi || is_real(); }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |x|^2 as an exact rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order used only for canonical sorting (re first, then im).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Canonical text: `rat | rat('+'|'-')rat'i' | rat'i'`.
  std::string to_string() const;
  /// Human notation: like to_string but writes `i` / `-i` for unit imaginaries.
  std::string pretty() const;

  /// Parses the canonical grammar; throws InputError on malformed text.
  static Scalar parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Sign and magnitude text of a coefficient inside a printed sum. The text is
/// empty for a unit coefficient in front of a monomial and ends with `*`
/// whenever a monomial follows.
std::pair<bool, std::string> coeff_text(const Scalar& c, bool before_monomial);

}  // namespace valrel
