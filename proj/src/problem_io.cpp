#include "valrel/problem_io.hpp"

#include <fstream>
#include <sstream>

namespace valrel {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw InputError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

std::size_t as_count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError(where + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

Scalar as_scalar(const json& v, Field field, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": expected a scalar string");
  Scalar s;
  try {
    s = Scalar::parse(v.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  if (!s.belongs_to(field)) throw InputError(where + ": imaginary scalar in a problem over Q");
  return s;
}

UniPoly as_upoly(const json& v, Field field, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected a list of scalar strings");
  std::vector<Scalar> c;
  for (std::size_t k = 0; k < v.size(); ++k) c.push_back(as_scalar(v[k], field, where + "[" + std::to_string(k) + "]"));
  return UniPoly(std::move(c));
}

KzPoly as_poly(const json& v, std::size_t nvars, Field field, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected a list of terms");
  KzPoly p(nvars);
  for (std::size_t t = 0; t < v.size(); ++t) {
    const std::string tw = where + "[" + std::to_string(t) + "]";
    UniPoly c = as_upoly(member(v[t], "c", tw), field, tw + ".c");
    UniPoly d = v[t].contains("d") ? as_upoly(v[t].at("d"), field, tw + ".d") : UniPoly(1);
    if (d.is_zero()) throw InputError(tw + ".d: zero denominator");
    const json& e = member(v[t], "e", tw);
    if (!e.is_array() || e.size() != nvars)
      throw InputError(tw + ".e: exponent vector must have length numX = " + std::to_string(nvars));
    std::vector<std::uint32_t> exps;
    for (std::size_t k = 0; k < e.size(); ++k) exps.push_back(static_cast<std::uint32_t>(as_count(e[k], tw + ".e[" + std::to_string(k) + "]")));
    p.add_term(Monomial(std::move(exps)), RatFunc(c, d));
  }
  return p;
}

}  // namespace

ProblemFile parse_problem_text(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("problem: expected a JSON object");
  if (doc.contains("format") && (!doc["format"].is_number_integer() || doc["format"].get<int>() != kFormatVersion))
    throw InputError("format: unsupported version (expected 1)");

  ProblemFile pf;
  const json& field = member(doc, "field", "problem");
  if (field == "Q")
    pf.field = Field::Q;
  else if (field == "Qi")
    pf.field = Field::Qi;
  else
    throw InputError("field: expected \"Q\" or \"Qi\"");

  const std::size_t n = as_count(member(doc, "numX", "problem"), "numX");
  const std::size_t p = as_count(member(doc, "numForms", "problem"), "numForms");
  const json& forms = member(doc, "forms", "problem");
  if (!forms.is_array() || forms.size() != p) throw InputError("forms: expected numForms = " + std::to_string(p) + " rows");
  std::vector<std::vector<UniPoly>> m;
  for (std::size_t j = 0; j < p; ++j) {
    const std::string rw = "forms[" + std::to_string(j) + "]";
    if (!forms[j].is_array() || forms[j].size() != n)
      throw InputError(rw + ": expected numX = " + std::to_string(n) + " entries");
    std::vector<UniPoly> row;
    for (std::size_t k = 0; k < n; ++k) row.push_back(as_upoly(forms[j][k], pf.field, rw + "[" + std::to_string(k) + "]"));
    m.push_back(std::move(row));
  }
  try {
    pf.forms = LinearFormSet(std::move(m));
  } catch (const InputError& e) {
    throw InputError(std::string("forms: ") + e.what());
  }

  const json& ideal = member(doc, "ideal", "problem");
  if (!ideal.is_array()) throw InputError("ideal: expected a list of polynomials");
  for (std::size_t g = 0; g < ideal.size(); ++g) {
    KzPoly q = as_poly(ideal[g], n, pf.field, "ideal[" + std::to_string(g) + "]");
    pf.ideal.push_back(std::move(q));
  }

  if (doc.contains("alphas")) {
    const json& al = doc["alphas"];
    if (!al.is_array()) throw InputError("alphas: expected a list of scalar strings");
    for (std::size_t k = 0; k < al.size(); ++k) pf.alphas.push_back(as_scalar(al[k], pf.field, "alphas[" + std::to_string(k) + "]"));
  }
  return pf;
}

ProblemFile parse_problem(const std::filesystem::path& path) { return parse_problem_text(read_file(path)); }

json upoly_to_json(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

json poly_to_json(const KzPoly& p) {
  json out = json::array();
  for (const auto& [mon, coef] : p.terms()) {
    json t{{"c", upoly_to_json(coef.numer())}, {"e", mon.exponents()}};
    if (!coef.is_polynomial()) t["d"] = upoly_to_json(coef.denom());
    out.push_back(std::move(t));
  }
  return out;
}

json poly_to_json(const KPoly& p) { return poly_to_json(lift(p)); }

json problem_to_json(const ProblemFile& problem) {
  json forms = json::array();
  for (const auto& row : problem.forms.matrix()) {
    json r = json::array();
    for (const auto& e : row) r.push_back(upoly_to_json(e));
    forms.push_back(std::move(r));
  }
  json ideal = json::array();
  for (const auto& q : problem.ideal) ideal.push_back(poly_to_json(q));
  json doc{{"format", kFormatVersion},
           {"field", problem.field == Field::Q ? "Q" : "Qi"},
           {"numX", problem.num_x()},
           {"numForms", problem.num_forms()},
           {"forms", std::move(forms)},
           {"ideal", std::move(ideal)}};
  if (!problem.alphas.empty()) {
    json al = json::array();
    for (const auto& a : problem.alphas) al.push_back(a.to_string());
    doc["alphas"] = std::move(al);
  }
  return doc;
}

std::string emit_problem(const ProblemFile& problem) { return problem_to_json(problem).dump(2) + "\n"; }

std::vector<TruncatedSeries> parse_series_text(const std::string& text, Field field) {
  json doc = parse_json(text);
  if (!doc.is_array()) throw InputError("series file: expected a JSON list");
  std::vector<TruncatedSeries> out;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const std::string w = "[" + std::to_string(k) + "]";
    TruncatedSeries s;
    const json& name = member(doc[k], "name", w);
    if (!name.is_string()) throw InputError(w + ".name: expected a string");
    s.name = name.get<std::string>();
    const json& coeffs = member(doc[k], "coefficients", w);
    if (!coeffs.is_array()) throw InputError(w + ".coefficients: expected a list");
    for (std::size_t c = 0; c < coeffs.size(); ++c)
      s.coefficients.push_back(as_scalar(coeffs[c], field, w + ".coefficients[" + std::to_string(c) + "]"));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<TruncatedSeries> parse_series(const std::filesystem::path& path, Field field) {
  return parse_series_text(read_file(path), field);
}

json report_to_json(const ValueRelationIdeal& ideal, bool canonical) {
  json b1 = json::array();
  for (const auto& g : ideal.b1) b1.push_back(poly_to_json(g));
  json b2 = json::array();
  for (const auto& g : ideal.b2) b2.push_back(poly_to_json(g));
  json text = json::array();
  for (const auto& g : canonical ? ideal.canonical_generators() : ideal.generators()) text.push_back(g.to_string("Y"));
  return json{{"alpha", ideal.alpha.to_string()}, {"rank", ideal.rank},          {"zeroIdeal", ideal.is_zero_ideal},
              {"b1", std::move(b1)},              {"b2", std::move(b2)},         {"generators", std::move(text)}};
}

json relations_to_json(const std::vector<KzPoly>& relations) {
  json out = json::array();
  for (const auto& r : relations) out.push_back(json{{"poly", poly_to_json(r)}, {"text", r.to_string("Y")}});
  return out;
}

json report_to_json(const ExceptionalReport& report, bool canonical) {
  json roots = json::array();
  for (std::size_t k = 0; k < report.roots.verified_roots.size(); ++k)
    roots.push_back(json{{"alpha", report.roots.verified_roots[k].to_string()},
                         {"multiplicity", report.roots.multiplicities[k]}});
  json unresolved = json::array();
  for (const auto& uf : report.roots.unresolved_factors)
    unresolved.push_back(json{{"factor", upoly_to_json(uf.factor)},
                              {"text", uf.factor.to_string()},
                              {"approximations", uf.approximations}});
  json points = json::array();
  for (const auto& pt : report.points) points.push_back(report_to_json(pt, canonical));
  return json{{"format", kFormatVersion},
              {"order", to_string(report.spec.mode)},
              {"orderGuaranteed", report.spec.order_guaranteed},
              {"W", upoly_to_json(report.spec.w_end)},
              {"W_text", report.spec.w_end.to_string()},
              {"basisSize", report.spec.basis.elements.size()},
              {"roots", std::move(roots)},
              {"unresolvedFactors", std::move(unresolved)},
              {"points", std::move(points)}};
}

std::string summarize(const ValueRelationIdeal& ideal, bool canonical) {
  std::string out = "alpha = " + ideal.alpha.pretty() + ": ";
  if (ideal.is_zero_ideal) return out + "J = {0} (values algebraically independent)";
  out += "J generated by";
  const auto gens = canonical ? ideal.canonical_generators() : ideal.generators();
  for (std::size_t k = 0; k < gens.size(); ++k) out += (k ? ", " : " ") + gens[k].to_string("Y");
  if (ideal.alpha.is_zero())
    out += "\n  note: alpha = 0 is always exceptional for E-functions (their values there are algebraic)";
  return out;
}

std::string summarize(const ExceptionalReport& report, bool canonical) {
  std::ostringstream ss;
  ss << "order: " << to_string(report.spec.mode)
     << (report.spec.order_guaranteed ? "" : " (not an elimination order: W is not certified)") << "\n";
  ss << "W(z) = " << report.spec.w_end.to_string() << "\n";
  ss << "verified roots:";
  if (report.roots.verified_roots.empty()) ss << " none";
  for (std::size_t k = 0; k < report.roots.verified_roots.size(); ++k) {
    ss << " " << report.roots.verified_roots[k].pretty();
    if (report.roots.multiplicities[k] > 1) ss << " (x" << report.roots.multiplicities[k] << ")";
  }
  ss << "\n";
  for (const auto& uf : report.roots.unresolved_factors) {
    ss << "unresolved factor " << uf.factor.to_string() << ", approximate roots:";
    for (const auto& a : uf.approximations) ss << " " << a;
    ss << "\n";
  }
  for (const auto& pt : report.points) ss << summarize(pt, canonical) << "\n";
  return ss.str();
}

}  // namespace valrel
