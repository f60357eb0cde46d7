#pragma once

#include "valrel/groebner.hpp"
#include "valrel/linalg.hpp"
#include "valrel/mpoly.hpp"

#include <map>
#include <random>
#include <vector>

namespace support {

using namespace valrel;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  mpq_class rational(int range, int max_den) {
    mpq_class q(uniform(-range, range), uniform(1, max_den));
    q.canonicalize();
    return q;
  }
  Scalar scalar(Field field = Field::Qi, int range = 5, int max_den = 3) {
    mpq_class im = field == Field::Qi && coin() ? rational(range, max_den) : mpq_class(0);
    return Scalar(rational(range, max_den), im);
  }
  Scalar nonzero_scalar(Field field = Field::Qi, int range = 5, int max_den = 3) {
    Scalar s;
    while (s.is_zero()) s = scalar(field, range, max_den);
    return s;
  }
  UniPoly upoly(int max_degree, Field field = Field::Qi, int range = 4) {
    std::vector<Scalar> c;
    const int d = uniform(0, max_degree);
    for (int k = 0; k <= d; ++k) c.push_back(coin(0.7) ? scalar(field, range, 2) : Scalar());
    return UniPoly(std::move(c));
  }
  UniPoly nonzero_upoly(int max_degree, Field field = Field::Qi) {
    UniPoly p;
    while (p.is_zero()) p = upoly(max_degree, field);
    return p;
  }
  Monomial monomial(std::size_t n, int max_total) {
    std::vector<std::uint32_t> e(n, 0);
    int budget = uniform(0, max_total);
    for (int k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1))];
    return Monomial(std::move(e));
  }
  KPoly kpoly(std::size_t n, int terms, int max_total, Field field = Field::Qi) {
    KPoly p(n);
    for (int t = 0; t < terms; ++t) p.add_term(monomial(n, max_total), nonzero_scalar(field));
    return p;
  }
  KzPoly kzpoly(std::size_t n, int terms, int max_total, int zdeg, Field field = Field::Qi) {
    KzPoly p(n);
    for (int t = 0; t < terms; ++t) p.add_term(monomial(n, max_total), RatFunc(nonzero_upoly(zdeg, field)));
    return p;
  }

 private:
  std::mt19937_64 gen_;
};

/// All monomials in n variables of total degree <= d.
inline std::vector<Monomial> monomials_up_to(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t k, std::uint32_t left) -> void {
    if (k == n) {
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t a = 0; a <= left; ++a) {
      e[k] = a;
      self(self, k + 1, left - a);
    }
    e[k] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// The K-span of { m * g : g a generator, deg(m * g) <= D }, kept in reduced
/// row echelon form. Membership in it implies ideal membership; for D large
/// enough it captures the whole ideal in low degree.
class MacaulaySpace {
 public:
  MacaulaySpace(const std::vector<KPoly>& gens, std::size_t n, std::uint32_t degree) : n_(n) {
    for (const auto& m : monomials_up_to(n, degree)) col_.emplace(m, col_.size());
    for (const auto& g : gens) {
      if (g.is_zero() || g.total_degree() > degree) continue;
      for (const auto& m : monomials_up_to(n, degree - static_cast<std::uint32_t>(g.total_degree())))
        rows_.push_back(row_of(g.mul_term(Scalar(1), m)));
    }
    pivots_ = rref(rows_);
    rows_.resize(pivots_.size());
  }

  std::size_t columns() const { return col_.size(); }
  std::size_t dimension() const { return pivots_.size(); }

  /// Residue of f after elimination against the span; zero iff f lies in it.
  std::vector<Scalar> residue(const KPoly& f) const {
    std::vector<Scalar> v = row_of(f);
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      Scalar c = v[pivots_[r]];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!rows_[r][k].is_zero()) v[k] -= c * rows_[r][k];
    }
    return v;
  }

  bool contains(const KPoly& f) const {
    for (const auto& c : residue(f))
      if (!c.is_zero()) return false;
    return true;
  }

  /// Basis of the K-linear combinations of `candidates` lying in the span.
  std::vector<KPoly> kernel(const std::vector<KPoly>& images, const std::vector<KPoly>& candidates) const {
    Matrix<Scalar> sys = zero_matrix<Scalar>(col_.size(), images.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
      auto r = residue(images[j]);
      for (std::size_t i = 0; i < r.size(); ++i) sys[i][j] = r[i];
    }
    std::vector<KPoly> out;
    for (const auto& v : nullspace(std::move(sys), images.size())) {
      KPoly s(candidates.front().num_vars());
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) s += candidates[j] * v[j];
      out.push_back(std::move(s));
    }
    return out;
  }

 private:
  std::vector<Scalar> row_of(const KPoly& f) const {
    std::vector<Scalar> v(col_.size());
    for (const auto& [mon, coef] : f.terms()) {
      auto it = col_.find(mon);
      if (it == col_.end()) throw std::out_of_range("polynomial exceeds the Macaulay degree");
      v[it->second] = coef;
    }
    return v;
  }

  std::size_t n_;
  std::map<Monomial, std::size_t> col_;
  Matrix<Scalar> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::vector<KPoly> monomial_polys(std::size_t n, std::uint32_t d) {
  std::vector<KPoly> out;
  for (const auto& m : monomials_up_to(n, d)) out.push_back(KPoly::term(Scalar(1), m));
  return out;
}

/// Plain graded order (total degree, then lex): the literal mode with every
/// variable kept.
inline OrderSpec deglex(std::size_t n) { return OrderSpec{n, OrderMode::PaperLiteral}; }

}  // namespace support
