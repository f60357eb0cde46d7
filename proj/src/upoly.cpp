#include "valrel/upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace valrel {

UniPoly::UniPoly(Scalar c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

UniPoly::UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(Scalar c, int k) {
  if (c.is_zero()) return {};
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1);
  v.back() = std::move(c);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear(const Scalar& root) { return UniPoly({-root, Scalar(1)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Scalar UniPoly::leading_coeff() const { return is_zero() ? Scalar() : coeffs_.back(); }

UniPoly UniPoly::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return *this * leading_coeff().inverse();
}

UniPoly UniPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(coeffs_[k] * Scalar(static_cast<long>(k)));
  return UniPoly(std::move(d));
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

namespace {

// c * (Gaussian integer polynomial) with c a positive integer denominator.
struct Cleared {
  mpz_class den = 1;
  std::vector<mpz_class> re, im;
};

Cleared clear_denominators(const std::vector<Scalar>& v) {
  Cleared out;
  for (const auto& x : v) {
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), x.re().get_den_mpz_t());
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), x.im().get_den_mpz_t());
  }
  out.re.resize(v.size());
  out.im.resize(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.re[k] = out.den / v[k].re().get_den() * v[k].re().get_num();
    out.im[k] = out.den / v[k].im().get_den() * v[k].im().get_num();
  }
  return out;
}

}  // namespace

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  // integer convolution, one canonicalization per output coefficient
  Cleared a = clear_denominators(coeffs_), b = clear_denominators(o.coeffs_);
  const std::size_t len = coeffs_.size() + o.coeffs_.size() - 1;
  std::vector<mpz_class> re(len), im(len);
  for (std::size_t i = 0; i < a.re.size(); ++i) {
    if (a.re[i] == 0 && a.im[i] == 0) continue;
    for (std::size_t j = 0; j < b.re.size(); ++j) {
      mpz_addmul(re[i + j].get_mpz_t(), a.re[i].get_mpz_t(), b.re[j].get_mpz_t());
      mpz_submul(re[i + j].get_mpz_t(), a.im[i].get_mpz_t(), b.im[j].get_mpz_t());
      mpz_addmul(im[i + j].get_mpz_t(), a.re[i].get_mpz_t(), b.im[j].get_mpz_t());
      mpz_addmul(im[i + j].get_mpz_t(), a.im[i].get_mpz_t(), b.re[j].get_mpz_t());
    }
  }
  const mpz_class den = a.den * b.den;
  std::vector<Scalar> r(len);
  for (std::size_t k = 0; k < len; ++k) {
    mpq_class x(re[k], den), y(im[k], den);
    x.canonicalize();
    y.canonicalize();
    r[k] = Scalar(std::move(x), std::move(y));
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw MathError("division by zero polynomial");
  if (degree() < d.degree()) return {UniPoly(), *this};
  std::vector<Scalar> rem = coeffs_;
  std::vector<Scalar> quo(coeffs_.size() - d.coeffs_.size() + 1);
  Scalar inv_lead = d.leading_coeff().inverse();
  const int dd = d.degree();
  for (int k = degree(); k >= dd; --k) {
    Scalar& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    Scalar q = top * inv_lead;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= q * d.coeffs_[static_cast<std::size_t>(j)];
    quo[static_cast<std::size_t>(k - dd)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw MathError("inexact polynomial division");
  return q;
}

bool UniPoly::divides(const UniPoly& m) const {
  if (is_zero()) return m.is_zero();
  return m.divmod(*this).second.is_zero();
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    auto [negative, cs] = coeff_text(c, !mono.empty());
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += cs + mono;
  }
  return out;
}

namespace {

// Reduction modulo the prime (p, i - s) of Z[i], with s^2 = -1 mod p.
constexpr std::uint64_t kP = 998244353;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (b %= kP; e; e >>= 1, b = b * b % kP)
    if (e & 1) r = r * b % kP;
  return r;
}

const std::uint64_t kSqrtMinusOne = pow_mod(3, (kP - 1) / 4);

std::optional<std::uint64_t> reduce(const mpq_class& q) {
  std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kP);
  if (d == 0) return std::nullopt;
  return mpz_fdiv_ui(q.get_num_mpz_t(), kP) * pow_mod(d, kP - 2) % kP;
}

std::optional<std::vector<std::uint64_t>> reduce(const UniPoly& a) {
  std::vector<std::uint64_t> out;
  for (const auto& c : a.coeffs()) {
    auto re = reduce(c.re()), im = reduce(c.im());
    if (!re || !im) return std::nullopt;
    out.push_back((*re + *im * kSqrtMinusOne) % kP);
  }
  if (out.back() == 0) return std::nullopt;
  return out;
}

// True only when a and b are certainly coprime: a common factor over Q(i)
// survives reduction whenever the leading coefficients do.
bool coprime_mod_p(const UniPoly& a, const UniPoly& b) {
  auto x = reduce(a), y = reduce(b);
  if (!x || !y) return false;
  while (!y->empty()) {
    std::uint64_t inv = pow_mod(y->back(), kP - 2);
    while (x->size() >= y->size()) {
      std::uint64_t f = x->back() * inv % kP;
      std::size_t shift = x->size() - y->size();
      for (std::size_t k = 0; k < y->size(); ++k) (*x)[k + shift] = ((*x)[k + shift] + (kP - f) * (*y)[k]) % kP;
      while (!x->empty() && x->back() == 0) x->pop_back();
    }
    std::swap(*x, *y);
  }
  return x->size() == 1;
}

}  // namespace

UniPoly upoly_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw MathError("gcd of two zeros");
  if ((!a.is_zero() && a.is_constant()) || (!b.is_zero() && b.is_constant())) return UniPoly(1);
  if (!a.is_zero() && !b.is_zero() && coprime_mod_p(a, b)) return UniPoly(1);
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly upoly_lcm_monic(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) throw MathError("lcm of a zero polynomial");
  UniPoly g = upoly_gcd(a, b);
  return (a.monic().exact_div(g) * b.monic()).monic();
}

UniPoly squarefree_part(const UniPoly& a) {
  if (a.is_zero()) throw MathError("squarefree part of zero");
  if (a.is_constant()) return UniPoly(1);
  return a.monic().exact_div(upoly_gcd(a, a.derivative()));
}

bool divides_power_of(const UniPoly& d, const UniPoly& w) {
  if (d.is_zero()) return false;
  if (w.is_zero()) return true;
  UniPoly rest = d.monic();
  while (!rest.is_constant()) {
    UniPoly g = upoly_gcd(rest, w);
    if (g.is_constant()) return false;
    rest = rest.exact_div(g);
  }
  return true;
}

}  // namespace valrel
