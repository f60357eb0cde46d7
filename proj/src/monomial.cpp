#include "valrel/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace valrel {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const { return degree_in(0, exps_.size()); }

std::uint64_t Monomial::degree_in(std::size_t from, std::size_t to) const {
  std::uint64_t d = 0;
  for (std::size_t k = from; k < to && k < exps_.size(); ++k) d += exps_[k];
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.size() != size()) throw std::invalid_argument("monomial length mismatch");
  Monomial r = *this;
  for (std::size_t k = 0; k < size(); ++k) r.exps_[k] += o.exps_[k];
  return r;
}

std::string Monomial::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += var + std::to_string(k + 1);
    if (exps_[k] > 1) out += "^" + std::to_string(exps_[k]);
  }
  return out.empty() ? "1" : out;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
  if (!mono_divides(a, b)) throw std::invalid_argument("monomial quotient without divisibility");
  Monomial q = b;
  for (std::size_t k = 0; k < a.size(); ++k) q[k] -= a[k];
  return q;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial length mismatch");
  Monomial g(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) g[k] = std::min(a[k], b[k]);
  return g;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial length mismatch");
  Monomial g(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) g[k] = std::max(a[k], b[k]);
  return g;
}

std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b, const OrderSpec& ord) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial length mismatch");
  const std::size_t n = a.size();
  if (ord.split < 1 || ord.split > n) throw std::invalid_argument("elimination split outside 1..N");
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  if (ord.mode == OrderMode::PaperLiteral) {
    da = a.degree_in(0, ord.split);
    db = b.degree_in(0, ord.split);
  } else {
    da = a.degree_in(ord.split, n);
    db = b.degree_in(ord.split, n);
  }
  if (da != db) return da <=> db;
  return a <=> b;
}

std::string to_string(OrderMode mode) {
  return mode == OrderMode::ElimStandard ? "elim-standard" : "paper-literal";
}

OrderMode parse_order_mode(const std::string& name) {
  if (name == "elim-standard") return OrderMode::ElimStandard;
  if (name == "paper-literal") return OrderMode::PaperLiteral;
  throw std::invalid_argument("unknown order '" + name + "' (expected elim-standard or paper-literal)");
}

}  // namespace valrel
