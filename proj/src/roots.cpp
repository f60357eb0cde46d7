#include "valrel/value_relations.hpp"

#include <algorithm>
#include <cstdio>

namespace valrel {

namespace {

// Complex number over GMP floats of a fixed precision.
struct Cx {
  mpf_class re;
  mpf_class im;
};

class CxArith {
 public:
  explicit CxArith(unsigned bits) : bits_(bits) {}

  mpf_class real(long v) const { return mpf_class(v, bits_); }
  mpf_class real(const mpq_class& q) const {
    mpf_class f(0, bits_);
    f = q;
    return f;
  }
  Cx make(const Scalar& s) const { return {real(s.re()), real(s.im())}; }
  Cx make(long re, long im) const { return {real(re), real(im)}; }

  Cx add(const Cx& a, const Cx& b) const { return {mpf_class(a.re + b.re, bits_), mpf_class(a.im + b.im, bits_)}; }
  Cx sub(const Cx& a, const Cx& b) const { return {mpf_class(a.re - b.re, bits_), mpf_class(a.im - b.im, bits_)}; }
  Cx mul(const Cx& a, const Cx& b) const {
    return {mpf_class(a.re * b.re - a.im * b.im, bits_), mpf_class(a.re * b.im + a.im * b.re, bits_)};
  }
  Cx div(const Cx& a, const Cx& b) const {
    mpf_class d(b.re * b.re + b.im * b.im, bits_);
    return {mpf_class((a.re * b.re + a.im * b.im) / d, bits_), mpf_class((a.im * b.re - a.re * b.im) / d, bits_)};
  }
  mpf_class abs(const Cx& a) const { return mpf_class(sqrt(mpf_class(a.re * a.re + a.im * a.im, bits_)), bits_); }
  bool is_zero(const Cx& a) const { return sgn(a.re) == 0 && sgn(a.im) == 0; }

  Cx eval(const std::vector<Cx>& coeffs, const Cx& x) const {
    Cx acc = make(0, 0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add(mul(acc, x), *it);
    return acc;
  }

  mpf_class pow2(long e) const {
    mpf_class r(1, bits_);
    if (e >= 0)
      mpf_mul_2exp(r.get_mpf_t(), r.get_mpf_t(), static_cast<mp_bitcnt_t>(e));
    else
      mpf_div_2exp(r.get_mpf_t(), r.get_mpf_t(), static_cast<mp_bitcnt_t>(-e));
    return r;
  }

 private:
  unsigned bits_;
};

// Simultaneous iteration on a monic squarefree polynomial.
std::vector<Cx> durand_kerner(const UniPoly& monic, unsigned bits) {
  CxArith ar(bits);
  const int d = monic.degree();
  std::vector<Cx> coeffs;
  for (const auto& c : monic.coeffs()) coeffs.push_back(ar.make(c));

  mpf_class radius = ar.real(1);
  for (int k = 0; k < d; ++k) radius = std::max(radius, mpf_class(ar.real(1) + ar.abs(coeffs[static_cast<std::size_t>(k)]), bits));

  std::vector<Cx> z;
  Cx seed{ar.real(mpq_class(2, 5)), ar.real(mpq_class(9, 10))};
  Cx cur{radius, ar.real(0)};
  for (int k = 0; k < d; ++k) {
    cur = ar.mul(cur, seed);
    z.push_back(cur);
  }

  const mpf_class tol = ar.pow2(-static_cast<long>(bits) + 8);
  const int max_iter = 400 + 40 * d;
  bool converged = false;
  for (int it = 0; it < max_iter && !converged; ++it) {
    mpf_class worst = ar.real(0);
    for (int k = 0; k < d; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      Cx denom = ar.make(1, 0);
      for (int j = 0; j < d; ++j)
        if (j != k) denom = ar.mul(denom, ar.sub(zk, z[static_cast<std::size_t>(j)]));
      if (ar.is_zero(denom)) throw MathError("root approximations collided; increase --precision");
      Cx step = ar.div(ar.eval(coeffs, zk), denom);
      zk = ar.sub(zk, step);
      mpf_class rel(ar.abs(step) / (ar.real(1) + ar.abs(zk)), bits);
      if (rel > worst) worst = rel;
    }
    converged = worst < tol;
  }
  if (!converged) throw MathError("root iteration did not converge at this precision; increase --precision");

  const mpf_class separation = ar.pow2(-static_cast<long>(bits) / 3);
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      if (ar.abs(ar.sub(z[static_cast<std::size_t>(a)], z[static_cast<std::size_t>(b)])) < separation)
        throw MathError("precision insufficient to separate roots; increase --precision");
  return z;
}

// Last continued-fraction convergent of x with |numerator|, denominator <= bound.
mpq_class best_rational(const mpf_class& x, long bound, const mpf_class& zero_tol) {
  if (abs(x) < zero_tol) return 0;
  mpq_class exact(x);
  mpz_class num = exact.get_num();
  mpz_class den = exact.get_den();
  // Convergent recurrences seeded with h_{-1} = 1, h_{-2} = 0, k_{-1} = 0, k_{-2} = 1.
  mpz_class h_prev = 0, h = 1, k_prev = 1, k = 0;
  mpq_class best = 0;
  bool have = false;
  while (den != 0) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > bound || abs(h_next) > bound) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    best = mpq_class(h, k);
    have = true;
    mpz_class r = num - a * den;
    num = den;
    den = r;
  }
  if (!have) return 0;
  best.canonicalize();
  return best;
}

std::string format_approx(const mpf_class& x) {
  char buf[96];
  gmp_snprintf(buf, sizeof buf, "%.20Fg", x.get_mpf_t());
  return buf;
}

std::string format_approx(const Cx& z, unsigned bits) {
  CxArith ar(bits);
  const mpf_class tiny = ar.pow2(-static_cast<long>(bits) / 2);
  std::string re = format_approx(abs(z.re) < tiny ? ar.real(0) : z.re);
  if (abs(z.im) < tiny) return re;
  std::string im = format_approx(abs(z.im));
  return re + (sgn(z.im) < 0 ? "-" : "+") + im + "i";
}

}  // namespace

RootReport find_roots(const UniPoly& w, long denom_bound, unsigned precision_bits, Field field) {
  if (w.is_zero()) throw MathError("roots of the zero polynomial");
  if (precision_bits < 32) throw InputError("precision must be at least 32 bits");
  RootReport report;
  UniPoly rest = squarefree_part(w);
  if (rest.degree() < 1) return report;

  std::vector<Cx> approx = durand_kerner(rest, precision_bits);
  CxArith ar(precision_bits);
  const mpf_class zero_tol = ar.pow2(-static_cast<long>(precision_bits) / 2);

  std::vector<Cx> leftover;
  for (const auto& z : approx) {
    Scalar cand(best_rational(z.re, denom_bound, zero_tol), best_rational(z.im, denom_bound, zero_tol));
    bool accept = cand.belongs_to(field) && !rest.is_constant() && rest.eval(cand).is_zero();
    if (!accept) {
      leftover.push_back(z);
      continue;
    }
    rest = rest.exact_div(UniPoly::linear(cand));
    report.verified_roots.push_back(cand);
  }

  std::sort(report.verified_roots.begin(), report.verified_roots.end());
  for (const auto& root : report.verified_roots) {
    unsigned mult = 0;
    UniPoly q = w;
    UniPoly lin = UniPoly::linear(root);
    while (q.degree() >= 1) {
      auto [quo, rem] = q.divmod(lin);
      if (!rem.is_zero()) break;
      q = std::move(quo);
      ++mult;
    }
    report.multiplicities.push_back(mult);
  }

  if (rest.degree() >= 1) {
    UnresolvedFactor uf{rest.monic(), {}};
    for (const auto& z : leftover) uf.approximations.push_back(format_approx(z, precision_bits));
    report.unresolved_factors.push_back(std::move(uf));
  }
  return report;
}

}  // namespace valrel
