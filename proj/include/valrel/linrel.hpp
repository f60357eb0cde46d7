#pragma once

#include "valrel/linalg.hpp"
#include "valrel/ratfunc.hpp"

#include <string>
#include <vector>

namespace valrel {

/// Taylor coefficients a_0..a_M of a power series.
struct TruncatedSeries {
  std::string name;
  std::vector<Scalar> coefficients;

  std::size_t order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

/// One candidate relation sum_j P_j(z) y_j(z) = 0 (mod z^{M+1}).
using Relation = std::vector<UniPoly>;

/// Basis of the relations with deg P_j <= degree_bound that hold modulo
/// z^{M+1}. Relations are certified only up to the truncation. Each basis
/// vector is normalized so that its first nonzero unknown (ordered by
/// series, then by z-degree) equals 1. Throws InputError when a series is
/// shorter than M+1 or when M < (degree_bound + 1) * count.
std::vector<Relation> linear_relations_truncated(const std::vector<TruncatedSeries>& series,
                                                 std::size_t degree_bound, std::size_t truncation);

struct IndependentSubset {
  /// Kept indices, increasing (0-based).
  std::vector<std::size_t> kept;
  /// For each dropped index i: F_i = sum_t expressions[i][t] * F_{kept[t]}.
  std::vector<std::pair<std::size_t, std::vector<RatFunc>>> expressions;
};

/// Lexicographically first maximal subset of the `count` functions that no
/// relation in `relations` involves alone, with the others expressed over K(z).
IndependentSubset independent_subset(const std::vector<Relation>& relations, std::size_t count);

/// Coefficients of sum_j P_j y_j up to z^{truncation}.
std::vector<Scalar> apply_relation(const Relation& rel, const std::vector<TruncatedSeries>& series,
                                   std::size_t truncation);

}  // namespace valrel
