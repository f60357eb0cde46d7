#pragma once

#include "valrel/budget.hpp"
#include "valrel/monomial.hpp"
#include "valrel/ratfunc.hpp"
#include "valrel/scalar.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace valrel {

/// Sparse polynomial in N variables over a coefficient field F (Scalar for K,
/// RatFunc for K(z)). Terms are keyed by exponent vector in plain lex order;
/// monomial orders are applied at use sites because one polynomial is often
/// viewed under several of them.
template <class F>
class MultiPoly {
 public:
  using Coeff = F;
  using Terms = std::map<Monomial, F>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const F& c) {
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static MultiPoly variable(std::size_t nvars, std::size_t index) {
    MultiPoly p(nvars);
    p.add_term(Monomial::variable(nvars, index), F(1));
    return p;
  }
  static MultiPoly term(const F& c, const Monomial& m) {
    MultiPoly p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t num_vars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  F coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? F() : it->second;
  }

  void add_term(const Monomial& m, const F& c) {
    check_arity(m);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void erase(const Monomial& m) { terms_.erase(m); }

  /// this -= c * m * other.
  void sub_scaled(const F& c, const Monomial& m, const MultiPoly& other) {
    check_arity(other);
    if (c.is_zero()) return;
    for (const auto& [mon, coef] : other.terms_) {
      Monomial key = mon * m;
      F delta = c * coef;
      auto [it, inserted] = terms_.try_emplace(std::move(key), -delta);
      if (!inserted) {
        it->second -= delta;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
  }

  MultiPoly mul_term(const F& c, const Monomial& m) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [mon, coef] : terms_) r.terms_.emplace_hint(r.terms_.end(), mon * m, coef * c);
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [mon, coef] : r.terms_) coef = -coef;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [mon, coef] : o.terms_) add_term(mon, coef);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [mon, coef] : o.terms_) add_term(mon, -coef);
    return *this;
  }
  MultiPoly& operator*=(const F& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [mon, coef] : terms_) coef *= c;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const F& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [mon, coef] : terms_) d = std::max(d, mon.degree());
    return d;
  }

  /// True when no term involves T_{i+1}, ..., T_N.
  bool depends_only_on_first(std::size_t i) const {
    for (const auto& [mon, coef] : terms_)
      if (mon.degree_in(i, nvars_) != 0) return false;
    return true;
  }

  /// Human notation with terms in decreasing lex order, e.g. `i*Y1 + Y2`.
  std::string to_string(const std::string& var = "T") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const bool has_mono = !it->first.is_one();
      auto [negative, cs] = coeff_text(it->second, has_mono);
      if (out.empty())
        out = negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      out += cs + (has_mono ? it->first.to_string(var) : "");
    }
    return out;
  }

 private:
  void check_arity(const Monomial& m) const {
    if (m.size() != nvars_) throw std::invalid_argument("monomial length does not match variable count");
  }
  void check_arity(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials live in different variable counts");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using KPoly = MultiPoly<Scalar>;
using KzPoly = MultiPoly<RatFunc>;

/// Leading monomial and coefficient under an order.
template <class F>
struct LeadData {
  Monomial mon;
  F coeff;

  const std::vector<std::uint32_t>& exponent() const { return mon.exponents(); }
  MultiPoly<F> term() const { return MultiPoly<F>::term(coeff, mon); }
};

/// Throws MathError for the zero polynomial.
template <class F>
LeadData<F> lead(const MultiPoly<F>& p, const OrderSpec& ord) {
  if (p.is_zero()) throw MathError("leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (mono_less(best->first, it->first, ord)) best = it;
  return {best->first, best->second};
}

/// S(P,Q) = (lt(Q) P - lt(P) Q) / gcd(lm(P), lm(Q)).
template <class F>
MultiPoly<F> s_poly(const MultiPoly<F>& p, const MultiPoly<F>& q, const OrderSpec& ord) {
  if (p.is_zero() || q.is_zero()) throw MathError("S-polynomial of a zero polynomial");
  LeadData<F> lp = lead(p, ord);
  LeadData<F> lq = lead(q, ord);
  Monomial g = mono_gcd(lp.mon, lq.mon);
  MultiPoly<F> s = p.mul_term(lq.coeff, mono_quotient(lq.mon, g));
  s.sub_scaled(lp.coeff, mono_quotient(lp.mon, g), q);
  return s;
}

/// One weak-division step: P -= (coeff * quotient) * divisors[divisor].
template <class F>
struct DivisionStep {
  std::size_t divisor = 0;
  Monomial quotient;
  F coeff;
};

template <class F>
struct WeakDivision {
  MultiPoly<F> remainder;
  std::vector<DivisionStep<F>> trace;
};

/// Weak (top-only) division, always using the first divisor in list order
/// whose leading monomial divides the current leading monomial. `on_step`
/// sees the intermediate polynomial after every subtraction.
template <class F, class OnStep>
WeakDivision<F> weak_remainder(MultiPoly<F> p, const std::vector<LeadData<F>>& leads,
                               const std::vector<MultiPoly<F>>& divisors, const OrderSpec& ord,
                               StepBudget* budget, OnStep&& on_step) {
  WeakDivision<F> out;
  while (!p.is_zero()) {
    LeadData<F> lp = lead(p, ord);
    std::size_t k = 0;
    while (k < divisors.size() && !mono_divides(leads[k].mon, lp.mon)) ++k;
    if (k == divisors.size()) break;
    if (budget) budget->charge(divisors.size());
    DivisionStep<F> step{k, mono_quotient(lp.mon, leads[k].mon), lp.coeff / leads[k].coeff};
    p.sub_scaled(step.coeff, step.quotient, divisors[k]);
    out.trace.push_back(std::move(step));
    on_step(p);
  }
  out.remainder = std::move(p);
  return out;
}

template <class F>
WeakDivision<F> weak_remainder(const MultiPoly<F>& p, const std::vector<MultiPoly<F>>& divisors,
                               const OrderSpec& ord, StepBudget* budget = nullptr) {
  std::vector<LeadData<F>> leads;
  leads.reserve(divisors.size());
  for (const auto& d : divisors) leads.push_back(lead(d, ord));
  return weak_remainder(p, leads, divisors, ord, budget, [](const MultiPoly<F>&) {});
}

/// Coefficientwise image of p under fn (a map F -> G).
template <class G, class F, class Fn>
MultiPoly<G> map_coefficients(const MultiPoly<F>& p, Fn&& fn) {
  MultiPoly<G> r(p.num_vars());
  for (const auto& [mon, coef] : p.terms()) r.add_term(mon, fn(coef));
  return r;
}

/// Same polynomial viewed in `nvars` variables; dropped variables must not occur.
template <class F>
MultiPoly<F> with_num_vars(const MultiPoly<F>& p, std::size_t nvars) {
  MultiPoly<F> r(nvars);
  for (const auto& [mon, coef] : p.terms()) {
    std::vector<std::uint32_t> e(nvars, 0);
    for (std::size_t k = 0; k < mon.size(); ++k) {
      if (k < nvars)
        e[k] = mon[k];
      else if (mon[k] != 0)
        throw std::invalid_argument("variable count reduction drops a used variable");
    }
    r.add_term(Monomial(std::move(e)), coef);
  }
  return r;
}

/// p(images_1, ..., images_N); all images share one variable count.
template <class F>
MultiPoly<F> substitute(const MultiPoly<F>& p, const std::vector<MultiPoly<F>>& images,
                        std::size_t image_vars) {
  if (images.size() != p.num_vars()) throw std::invalid_argument("substitution arity mismatch");
  std::vector<std::vector<MultiPoly<F>>> powers(images.size());
  auto power = [&](std::size_t var, std::uint32_t e) -> const MultiPoly<F>& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(MultiPoly<F>::constant(image_vars, F(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  MultiPoly<F> out(image_vars);
  for (const auto& [mon, coef] : p.terms()) {
    MultiPoly<F> t = MultiPoly<F>::constant(image_vars, coef);
    for (std::size_t v = 0; v < mon.size(); ++v)
      if (mon[v] != 0) t = t * power(v, mon[v]);
    out += t;
  }
  return out;
}

/// P_alpha: evaluate every coefficient at z = alpha. Zero coefficients vanish.
/// Throws MathError naming the monomial whose coefficient has a pole.
inline KPoly specialize(const KzPoly& p, const Scalar& alpha) {
  KPoly r(p.num_vars());
  for (const auto& [mon, coef] : p.terms()) {
    if (coef.denom().eval(alpha).is_zero())
      throw MathError("coefficient " + coef.to_string() + " of " + mon.to_string() +
                      " has a pole at z = " + alpha.to_string());
    r.add_term(mon, coef.eval(alpha));
  }
  return r;
}

inline KzPoly lift(const KPoly& p) {
  return map_coefficients<RatFunc>(p, [](const Scalar& c) { return RatFunc(c); });
}

}  // namespace valrel
