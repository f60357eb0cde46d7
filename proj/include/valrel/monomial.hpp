#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace valrel {

/// Exponent vector T_1^{a_1} ... T_N^{a_N}. The built-in operator<=> is the
/// plain lexicographic order on N^N (T_1 > T_2 > ... for single variables);
/// it is the tie-break of both elimination orders and the key order of
/// polynomial term maps.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t k) const { return exps_[k]; }
  std::uint32_t& operator[](std::size_t k) { return exps_[k]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  /// Sum of exponents at positions [from, to).
  std::uint64_t degree_in(std::size_t from, std::size_t to) const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

  std::string to_string(const std::string& var = "T") const;

 private:
  std::vector<std::uint32_t> exps_;
};

/// True iff a divides b (componentwise a <= b).
bool mono_divides(const Monomial& a, const Monomial& b);
/// b / a; throws std::invalid_argument unless a divides b.
Monomial mono_quotient(const Monomial& b, const Monomial& a);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);

enum class OrderMode {
  /// Degree in the eliminated variables T_{i+1..N} first, then lex.
  ElimStandard,
  /// Degree in the kept variables T_{1..i} first, then lex. Reproduces the
  /// printed values of the worked examples but is not an elimination order.
  PaperLiteral,
};

/// The i-th elimination order. `split` is i, the number of kept variables.
struct OrderSpec {
  std::size_t split = 1;
  OrderMode mode = OrderMode::ElimStandard;

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b, const OrderSpec& ord);

inline bool mono_less(const Monomial& a, const Monomial& b, const OrderSpec& ord) {
  return mono_cmp(a, b, ord) < 0;
}

/// "elim-standard" / "paper-literal".
std::string to_string(OrderMode mode);
/// Throws std::invalid_argument for unknown names.
OrderMode parse_order_mode(const std::string& name);

}  // namespace valrel
