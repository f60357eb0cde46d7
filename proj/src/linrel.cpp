#include "valrel/linrel.hpp"

namespace valrel {

std::vector<Scalar> apply_relation(const Relation& rel, const std::vector<TruncatedSeries>& series,
                                   std::size_t truncation) {
  std::vector<Scalar> out(truncation + 1);
  for (std::size_t j = 0; j < rel.size() && j < series.size(); ++j) {
    const auto& coeffs = rel[j].coeffs();
    for (std::size_t d = 0; d < coeffs.size(); ++d)
      for (std::size_t n = 0; n + d <= truncation && n < series[j].coefficients.size(); ++n)
        out[n + d] += coeffs[d] * series[j].coefficients[n];
  }
  return out;
}

std::vector<Relation> linear_relations_truncated(const std::vector<TruncatedSeries>& series,
                                                 std::size_t degree_bound, std::size_t truncation) {
  const std::size_t count = series.size();
  const std::size_t unknowns = (degree_bound + 1) * count;
  if (truncation < unknowns)
    throw InputError("underdetermined: truncation order " + std::to_string(truncation) + " below required " +
                     std::to_string(unknowns));
  for (const auto& s : series)
    if (s.coefficients.size() < truncation + 1)
      throw InputError("series '" + s.name + "' has fewer than " + std::to_string(truncation + 1) + " coefficients");

  // Row n: coefficient of z^n; column j*(D+1)+d: coefficient of z^d in P_j.
  Matrix<Scalar> sys = zero_matrix<Scalar>(truncation + 1, unknowns);
  for (std::size_t n = 0; n <= truncation; ++n)
    for (std::size_t j = 0; j < count; ++j)
      for (std::size_t d = 0; d <= degree_bound && d <= n; ++d)
        sys[n][j * (degree_bound + 1) + d] = series[j].coefficients[n - d];

  std::vector<Relation> out;
  for (const auto& v : nullspace(std::move(sys), unknowns)) {
    Relation rel;
    for (std::size_t j = 0; j < count; ++j) {
      std::vector<Scalar> c(v.begin() + static_cast<std::ptrdiff_t>(j * (degree_bound + 1)),
                            v.begin() + static_cast<std::ptrdiff_t>((j + 1) * (degree_bound + 1)));
      rel.emplace_back(std::move(c));
    }
    out.push_back(std::move(rel));
  }
  return out;
}

IndependentSubset independent_subset(const std::vector<Relation>& relations, std::size_t count) {
  Matrix<RatFunc> a;
  for (const auto& rel : relations) {
    if (rel.size() != count) throw InputError("relation length differs from the number of functions");
    std::vector<RatFunc> row;
    for (const auto& p : rel) row.emplace_back(p);
    a.push_back(std::move(row));
  }
  std::size_t d = a.empty() ? 0 : rref(a).size();
  a.resize(d);

  IndependentSubset out;
  if (d == 0) {
    for (std::size_t k = 0; k < count; ++k) out.kept.push_back(k);
    return out;
  }

  for (const auto& kept : combinations(count, count - d)) {
    std::vector<std::size_t> dropped;
    for (std::size_t k = 0, s = 0; k < count; ++k) {
      if (s < kept.size() && kept[s] == k)
        ++s;
      else
        dropped.push_back(k);
    }
    Matrix<RatFunc> ad = zero_matrix<RatFunc>(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) ad[r][c] = a[r][dropped[c]];
    auto inv = inverse(ad);
    if (!inv) continue;
    // F_dropped = -A_d^{-1} A_kept F_kept.
    out.kept = kept;
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<RatFunc> expr(kept.size());
      for (std::size_t t = 0; t < kept.size(); ++t) {
        RatFunc acc;
        for (std::size_t r = 0; r < d; ++r) acc += (*inv)[c][r] * a[r][kept[t]];
        expr[t] = -acc;
      }
      out.expressions.emplace_back(dropped[c], std::move(expr));
    }
    return out;
  }
  throw MathError("no independent subset found");
}

}  // namespace valrel
