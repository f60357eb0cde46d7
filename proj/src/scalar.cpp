#include "valrel/scalar.hpp"

#include <cctype>

namespace valrel {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw MathError("division by zero");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw MathError("division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  mpq_class mag = abs(im_);
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "-") + mag.get_str() + "i";
}

std::string Scalar::pretty() const {
  if (sgn(re_) == 0 && abs(im_) == 1) return sgn(im_) > 0 ? "i" : "-i";
  return to_string();
}

std::pair<bool, std::string> coeff_text(const Scalar& c, bool before_monomial) {
  const std::string star = before_monomial ? "*" : "";
  if (!c.is_real() && sgn(c.re()) != 0) return {false, "(" + c.to_string() + ")" + star};
  const bool imaginary = !c.is_real();
  const mpq_class& part = imaginary ? c.im() : c.re();
  mpq_class mag = abs(part);
  std::string text;
  if (imaginary)
    text = (mag == 1 ? std::string("i") : mag.get_str() + "i") + star;
  else if (mag != 1 || !before_monomial)
    text = mag.get_str() + star;
  return {sgn(part) < 0, text};
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// rat := ['-'] digits ['/' digits]
mpq_class parse_rat(std::string_view s, std::string_view whole, bool allow_sign) {
  bool neg = false;
  if (allow_sign && !s.empty() && s.front() == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw InputError("malformed scalar '" + std::string(whole) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in scalar '" + std::string(whole) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  if (text.empty()) throw InputError("empty scalar");
  if (text.back() != 'i') return Scalar(parse_rat(text, text, true));

  std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary part starts after the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    return Scalar(0, parse_rat(body, text, true));
  }
  mpq_class re = parse_rat(body.substr(0, split), text, true);
  mpq_class im = parse_rat(body.substr(split + 1), text, false);
  if (body[split] == '-') im = -im;
  return Scalar(std::move(re), std::move(im));
}

}  // namespace valrel
