#include "valrel/problem_io.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace valrel;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInput = 2, kBudget = 3, kDependent = 4 };

struct Common {
  std::string problem;
  std::string order = "elim-standard";
  long denom_bound = 1'000'000;
  unsigned precision = 256;
  std::size_t step_budget = StepBudget::kDefaultLimit;
  bool canonical = false;
  bool json_out = false;
};

void add_common(CLI::App* app, Common& c, bool with_roots) {
  app->add_option("problem", c.problem, "problem file (JSON, format 1)")->required();
  app->add_option("--order", c.order, "monomial order: elim-standard | paper-literal")
      ->check(CLI::IsMember({"elim-standard", "paper-literal"}));
  if (with_roots) {
    app->add_option("--denom-bound", c.denom_bound, "bound on numerators and denominators of candidate roots");
    app->add_option("--precision", c.precision, "working precision in bits for root approximation");
  }
  app->add_option("--step-budget", c.step_budget, "maximum number of reduction steps");
  app->add_flag("--canonical-output", c.canonical, "print reduced Groebner bases of J_alpha");
  app->add_flag("--json", c.json_out, "machine-readable output");
}

int run_functional(const Common& c) {
  ProblemFile pf = parse_problem(c.problem);
  StepBudget budget(c.step_budget);
  auto rel = functional_relations(pf.forms, pf.ideal, &budget);
  if (c.json_out) {
    std::cout << json{{"format", kFormatVersion}, {"independent", rel.empty()}, {"relations", relations_to_json(rel)}}.dump(2)
              << "\n";
  } else if (rel.empty()) {
    std::cout << "the forms are algebraically independent modulo the ideal\n";
  } else {
    std::cout << "functional relations:\n";
    for (const auto& r : rel) std::cout << "  " << r.to_string("Y") << "\n";
  }
  return kOk;
}

int run_exceptional(const Common& c) {
  ProblemFile pf = parse_problem(c.problem);
  StepBudget budget(c.step_budget);
  ExceptionalOptions opts{parse_order_mode(c.order), c.denom_bound, c.precision, pf.field, &budget};
  ExceptionalReport report = exceptional_set(pf.forms, pf.ideal, opts);
  if (c.json_out)
    std::cout << report_to_json(report, c.canonical).dump(2) << "\n";
  else
    std::cout << summarize(report, c.canonical);
  return kOk;
}

int run_values(const Common& c, const std::vector<std::string>& alpha_texts) {
  ProblemFile pf = parse_problem(c.problem);
  std::vector<Scalar> alphas;
  for (const auto& text : alpha_texts) {
    try {
      alphas.push_back(Scalar::parse(text));
    } catch (const InputError& e) {
      throw InputError(std::string("--alpha: ") + e.what());
    }
    if (!alphas.back().belongs_to(pf.field)) throw InputError("--alpha: imaginary point in a problem over Q");
  }
  if (alphas.empty()) alphas = pf.alphas;
  if (alphas.empty()) throw InputError("no point given: pass --alpha or list \"alphas\" in the problem file");

  StepBudget budget(c.step_budget);
  json out = json::array();
  for (const auto& alpha : alphas) {
    ValueRelationIdeal j = j_alpha_generators(pf.forms, pf.ideal, alpha, &budget);
    if (c.json_out)
      out.push_back(report_to_json(j, c.canonical));
    else
      std::cout << summarize(j, c.canonical) << "\n";
  }
  if (c.json_out) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  return kOk;
}

int run_linrel(const std::string& path, std::size_t degree_bound, std::size_t truncation, const std::string& field,
               bool json_out) {
  auto series = parse_series(path, field == "Q" ? Field::Q : Field::Qi);
  auto rels = linear_relations_truncated(series, degree_bound, truncation);
  IndependentSubset sub = independent_subset(rels, series.size());

  auto name = [&](std::size_t k) { return series[k].name.empty() ? "F" + std::to_string(k + 1) : series[k].name; };
  if (json_out) {
    json jr = json::array();
    for (const auto& rel : rels) {
      json polys = json::array();
      for (const auto& p : rel) polys.push_back(upoly_to_json(p));
      jr.push_back(std::move(polys));
    }
    json kept = json::array();
    for (auto k : sub.kept) kept.push_back(k + 1);
    json ex = json::array();
    for (const auto& [i, expr] : sub.expressions) {
      json coeffs = json::array();
      for (const auto& q : expr) coeffs.push_back(q.to_string());
      ex.push_back(json{{"index", i + 1}, {"coefficients", std::move(coeffs)}});
    }
    std::cout << json{{"format", kFormatVersion},
                      {"status", "candidate"},
                      {"degreeBound", degree_bound},
                      {"truncation", truncation},
                      {"relations", std::move(jr)},
                      {"kept", std::move(kept)},
                      {"expressions", std::move(ex)}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "candidate relations (certified modulo z^" << truncation + 1 << ", degree <= " << degree_bound
            << "):";
  if (rels.empty()) std::cout << " none";
  std::cout << "\n";
  for (const auto& rel : rels) {
    std::string line;
    for (std::size_t k = 0; k < rel.size(); ++k) {
      if (rel[k].is_zero()) continue;
      if (!line.empty()) line += " + ";
      line += "(" + rel[k].to_string() + ")*" + name(k);
    }
    std::cout << "  " << line << " = 0\n";
  }
  std::cout << "kept:";
  for (auto k : sub.kept) std::cout << " " << name(k);
  std::cout << "\n";
  for (const auto& [i, expr] : sub.expressions) {
    std::string line;
    for (std::size_t t = 0; t < expr.size(); ++t) {
      if (expr[t] == RatFunc(0)) continue;
      if (!line.empty()) line += " + ";
      line += "(" + expr[t].to_string() + ")*" + name(sub.kept[t]);
    }
    std::cout << "  " << name(i) << " = " << (line.empty() ? "0" : line) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"value relations of linear forms modulo a parametric ideal"};
  app.require_subcommand(1);

  Common fc, ec, vc;
  auto* functional = app.add_subcommand("functional", "relations among the forms over K(z)");
  add_common(functional, fc, false);
  auto* exceptional = app.add_subcommand("exceptional", "exceptional polynomial W, its roots and J_alpha there");
  add_common(exceptional, ec, true);
  auto* values = app.add_subcommand("values", "value-relation ideal J_alpha at given points");
  add_common(values, vc, false);
  std::vector<std::string> alphas;
  values->add_option("--alpha", alphas, "point, e.g. 1/6i (repeatable; default: the file's alphas)");

  std::string series_path, field = "Qi";
  std::size_t degree_bound = 0, truncation = 0;
  bool linrel_json = false;
  auto* linrel = app.add_subcommand("linrel", "K[z]-linear relations among truncated power series");
  linrel->add_option("series", series_path, "series file (JSON list)")->required();
  linrel->add_option("--degree-bound", degree_bound, "maximal degree of the polynomial coefficients")->required();
  linrel->add_option("--truncation", truncation, "truncation order M")->required();
  linrel->add_option("--field", field, "Q or Qi")->check(CLI::IsMember({"Q", "Qi"}));
  linrel->add_flag("--json", linrel_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*functional) return run_functional(fc);
    if (*exceptional) return run_exceptional(ec);
    if (*values) return run_values(vc, alphas);
    if (*linrel) return run_linrel(series_path, degree_bound, truncation, field, linrel_json);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  } catch (const FunctionsDependent& e) {
    std::cerr << e.what() << "\n";
    for (const auto& r : e.relations()) std::cerr << "  " << r.to_string("Y") << "\n";
    return kDependent;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
