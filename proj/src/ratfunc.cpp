#include "valrel/ratfunc.hpp"

namespace valrel {

RatFunc::RatFunc(UniPoly n, UniPoly d) {
  if (d.is_zero()) throw MathError("division by zero in rational function");
  if (n.is_zero()) {
    den_ = UniPoly(1);
    return;
  }
  if (!d.is_constant()) {
    UniPoly g = upoly_gcd(n, d);
    if (!g.is_constant()) {
      n = n.exact_div(g);
      d = d.exact_div(g);
    }
  }
  Scalar lead = d.leading_coeff();
  if (!lead.is_one()) {
    Scalar inv = lead.inverse();
    n *= inv;
    d *= inv;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw MathError("division by zero in rational function");
  return RatFunc(den_, num_);
}

Scalar RatFunc::eval(const Scalar& at) const {
  Scalar d = den_.eval(at);
  if (d.is_zero()) throw MathError("pole at z = " + at.to_string() + " of " + to_string());
  return num_.eval(at) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  // Henrici: only the common part of the denominators can cancel
  UniPoly g = upoly_gcd(den_, o.den_);
  if (g.is_constant()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = num_.is_zero() ? UniPoly(1) : den_ * o.den_;
    return *this;
  }
  UniPoly a = den_.exact_div(g), b = o.den_.exact_div(g);
  UniPoly t = num_ * b + o.num_ * a;
  if (t.is_zero()) return *this = RatFunc();
  UniPoly h = upoly_gcd(t, g);
  num_ = t.exact_div(h);
  den_ = (a * o.den_).exact_div(h);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  UniPoly g1 = o.den_.is_constant() ? UniPoly(1) : upoly_gcd(num_, o.den_);
  UniPoly g2 = den_.is_constant() ? UniPoly(1) : upoly_gcd(o.num_, den_);
  num_ = num_.exact_div(g1) * o.num_.exact_div(g2);
  den_ = den_.exact_div(g2) * o.den_.exact_div(g1);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw MathError("division by zero in rational function");
  if (is_zero()) return *this;
  if (o.num_.is_constant() && den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_.leading_coeff().inverse();
    return *this;
  }
  UniPoly g1 = upoly_gcd(num_, o.num_);
  UniPoly g2 = upoly_gcd(den_, o.den_);
  UniPoly n = num_.exact_div(g1) * o.den_.exact_div(g2);
  UniPoly d = den_.exact_div(g2) * o.num_.exact_div(g1);
  Scalar inv = d.leading_coeff().inverse();
  num_ = n * inv;
  den_ = d * inv;
  return *this;
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.is_constant()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::pair<bool, std::string> coeff_text(const RatFunc& c, bool before_monomial) {
  if (c.num_.is_constant() && c.den_.is_constant())
    return coeff_text(c.num_.leading_coeff(), before_monomial);
  return {false, "(" + c.to_string() + ")" + (before_monomial ? "*" : "")};
}

RatFunc ratfunc_normalize(const UniPoly& n, const UniPoly& d) { return RatFunc(n, d); }

UniPoly num_of(const RatFunc& r) {
  if (r.is_zero()) throw MathError("num of zero");
  return r.numer();
}

UniPoly denom_of(const RatFunc& r) { return r.denom(); }

Scalar eval_at(const UniPoly& f, const Scalar& at) { return f.eval(at); }

Scalar eval_at(const RatFunc& f, const Scalar& at) { return f.eval(at); }

}  // namespace valrel
