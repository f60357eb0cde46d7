#include "valrel/coordinates.hpp"

namespace valrel {

LinearFormSet::LinearFormSet(std::vector<std::vector<UniPoly>> m) : m_(std::move(m)) {
  if (m_.empty()) throw InputError("at least one linear form is required");
  const std::size_t n = m_.front().size();
  for (const auto& row : m_)
    if (row.size() != n) throw InputError("linear form rows have different lengths");
  if (n == 0) throw InputError("linear forms need at least one variable");
  if (m_.size() > n) throw InputError("more forms than variables: forms cannot be independent");
}

KzPoly LinearFormSet::form(std::size_t j) const {
  KzPoly f(num_vars());
  for (std::size_t k = 0; k < num_vars(); ++k) f.add_term(Monomial::variable(num_vars(), k), RatFunc(m_[j][k]));
  return f;
}

Matrix<Scalar> LinearFormSet::at(const Scalar& alpha) const {
  Matrix<Scalar> out = zero_matrix<Scalar>(num_forms(), num_vars());
  for (std::size_t j = 0; j < num_forms(); ++j)
    for (std::size_t k = 0; k < num_vars(); ++k) out[j][k] = m_[j][k].eval(alpha);
  return out;
}

KPoly LinearFormSet::form_at(std::size_t j, const Scalar& alpha) const {
  KPoly f(num_vars());
  for (std::size_t k = 0; k < num_vars(); ++k)
    f.add_term(Monomial::variable(num_vars(), k), m_[j][k].eval(alpha));
  return f;
}

namespace {

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> out;
  std::size_t s = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (s < subset.size() && subset[s] == k)
      ++s;
    else
      out.push_back(k);
  }
  return out;
}

template <class F>
std::vector<MultiPoly<F>> linear_images(const Matrix<F>& coeffs, std::size_t nvars) {
  std::vector<MultiPoly<F>> images;
  for (const auto& row : coeffs) {
    MultiPoly<F> img(nvars);
    for (std::size_t k = 0; k < row.size(); ++k) img.add_term(Monomial::variable(nvars, k), row[k]);
    images.push_back(std::move(img));
  }
  return images;
}

}  // namespace

TFrame build_frame(const LinearFormSet& forms) {
  const std::size_t p = forms.num_forms();
  const std::size_t n = forms.num_vars();
  Matrix<RatFunc> m0 = zero_matrix<RatFunc>(p, n);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t k = 0; k < n; ++k) m0[j][k] = RatFunc(forms.entry(j, k));
  if (rank(m0) < p) throw InputError("forms not independent over K[z]");

  TFrame frame;
  for (const auto& excluded : combinations(n, n - p)) {
    std::vector<std::size_t> cols = complement(n, excluded);
    Matrix<RatFunc> minor = zero_matrix<RatFunc>(p, p);
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t c = 0; c < p; ++c) minor[j][c] = m0[j][cols[c]];
    RatFunc det = determinant(minor);
    if (det.is_zero()) continue;
    frame.w0 = det.numer().monic();
    frame.excluded = excluded;
    break;
  }

  frame.t_in_x = zero_matrix<RatFunc>(n, n);
  for (std::size_t j = 0; j < p; ++j) frame.t_in_x[j] = m0[j];
  for (std::size_t s = 0; s < frame.excluded.size(); ++s) frame.t_in_x[p + s][frame.excluded[s]] = RatFunc(1);
  auto inv = inverse(frame.t_in_x);
  if (!inv) throw MathError("change of variables is singular");
  frame.x_in_t = std::move(*inv);
  return frame;
}

KzPoly rewrite_in_T(const KzPoly& p, const TFrame& frame) {
  return substitute(p, linear_images(frame.x_in_t, p.num_vars()), p.num_vars());
}

KzPoly rewrite_in_X(const KzPoly& p, const TFrame& frame) {
  return substitute(p, linear_images(frame.t_in_x, p.num_vars()), p.num_vars());
}

AlphaFrame specialize_forms(const LinearFormSet& forms, const Scalar& alpha) {
  const std::size_t p = forms.num_forms();
  const std::size_t n = forms.num_vars();
  const Matrix<Scalar> mat = forms.at(alpha);

  AlphaFrame frame;
  frame.rank = rank(mat);
  const std::size_t r = frame.rank;
  bool found = false;
  for (const auto& itup : combinations(n, n - r)) {
    for (const auto& jtup : combinations(p, r)) {
      Matrix<Scalar> basis = zero_matrix<Scalar>(n, n);
      for (std::size_t t = 0; t < r; ++t) basis[t] = mat[jtup[t]];
      for (std::size_t s = 0; s < itup.size(); ++s) basis[r + s][itup[s]] = Scalar(1);
      auto inv = inverse(basis);
      if (!inv) continue;
      frame.i_tuple = itup;
      frame.j_tuple = jtup;
      frame.t_in_x = std::move(basis);
      frame.x_in_t = std::move(*inv);
      found = true;
      break;
    }
    if (found) break;
  }
  if (!found) throw MathError("no basis completion found for the specialized forms");

  // Kernel of chi_alpha: express the dependent forms through the chosen ones.
  Matrix<Scalar> chosen_t = zero_matrix<Scalar>(n, r);
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t k = 0; k < n; ++k) chosen_t[k][t] = mat[frame.j_tuple[t]][k];
  std::size_t t = 0;
  for (std::size_t j = 0; j < p; ++j) {
    if (t < r && frame.j_tuple[t] == j) {
      ++t;
      continue;
    }
    auto lambda = solve(chosen_t, mat[j]);
    if (!lambda) throw MathError("specialized form outside the span of the chosen forms");
    frame.kernel.emplace(j, std::move(*lambda));
  }
  return frame;
}

KPoly rewrite_in_T(const KPoly& p, const AlphaFrame& frame) {
  return substitute(p, linear_images(frame.x_in_t, p.num_vars()), p.num_vars());
}

}  // namespace valrel
