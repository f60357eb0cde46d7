#pragma once

#include "valrel/coordinates.hpp"
#include "valrel/linrel.hpp"
#include "valrel/value_relations.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace valrel {

inline constexpr int kFormatVersion = 1;

/// Problem file, format 1:
///
///   { "format": 1, "field": "Q" | "Qi", "numX": N, "numForms": p,
///     "forms": [[upoly, ... N], ... p],
///     "ideal": [[{"c": upoly, "e": [N exponents]}, ...], ...],
///     "alphas": ["scalar", ...] }          // optional
///
/// where upoly is a list of scalar strings indexed by z-degree. Terms may
/// carry "d": upoly for a denominator.
struct ProblemFile {
  Field field = Field::Qi;
  LinearFormSet forms;
  std::vector<KzPoly> ideal;
  std::vector<Scalar> alphas;

  std::size_t num_x() const { return forms.num_vars(); }
  std::size_t num_forms() const { return forms.num_forms(); }
};

/// Throws InputError with the offending field path, e.g. `forms[1][0][2]`.
ProblemFile parse_problem_text(const std::string& text);
ProblemFile parse_problem(const std::filesystem::path& path);

nlohmann::json problem_to_json(const ProblemFile& problem);
/// Canonical text; parse_problem_text(emit_problem(p)) reproduces p.
std::string emit_problem(const ProblemFile& problem);

/// Series file: [{"name": "...", "coefficients": ["scalar", ...]}, ...].
std::vector<TruncatedSeries> parse_series_text(const std::string& text, Field field = Field::Qi);
std::vector<TruncatedSeries> parse_series(const std::filesystem::path& path, Field field = Field::Qi);

nlohmann::json upoly_to_json(const UniPoly& p);
nlohmann::json poly_to_json(const KzPoly& p);
nlohmann::json poly_to_json(const KPoly& p);

/// With `canonical`, J_alpha generators are printed as reduced Gröbner bases.
nlohmann::json report_to_json(const ExceptionalReport& report, bool canonical = false);
nlohmann::json report_to_json(const ValueRelationIdeal& ideal, bool canonical = false);
nlohmann::json relations_to_json(const std::vector<KzPoly>& relations);

/// Human summary of a full exceptional-set run (W, roots, J_alpha).
std::string summarize(const ExceptionalReport& report, bool canonical = false);
std::string summarize(const ValueRelationIdeal& ideal, bool canonical = false);

}  // namespace valrel
