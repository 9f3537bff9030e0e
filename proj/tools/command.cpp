#include "command.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "troplift/errors.hpp"
#include "troplift/field.hpp"
#include "troplift/lifting.hpp"
#include "troplift/parse.hpp"
#include "troplift/polynomial.hpp"
#include "troplift/series.hpp"
#include "troplift/tropical.hpp"

namespace troplift::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string poly_text;
  std::string vars_text;
  std::string b_text;
  std::string gamma_text;
  std::string precision_text;
  std::string point_text;
  std::string field_name = "rational";
  double zero_tol = ToleranceConfig{}.zero_tolerance;
  double root_tol = ToleranceConfig{}.root_residual_tolerance;
  int iteration_cap = ToleranceConfig{}.iteration_cap;
  bool pretty = false;
  bool branches = false;
  int branch_cap = LiftOptions{}.branch_cap;
};

std::vector<std::string> split_commas(const std::string& text, const std::string& what) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) out.push_back(piece);
  if (!text.empty() && text.back() == ',') out.push_back("");
  for (const auto& p : out)
    if (p.empty()) throw UsageError("empty entry in " + what);
  if (out.empty()) throw UsageError("empty " + what);
  return out;
}

Field make_field(const CLI::App* sub, const Options& opt) {
  bool tol_given = sub->count("--zero-tol") || sub->count("--root-tol") ||
                   sub->count("--iteration-cap");
  if (opt.field_name == "rational") {
    if (tol_given)
      throw UsageError("tolerance flags are only valid with --field complex");
    return Field(Backend::Rational);
  }
  ToleranceConfig tol;
  tol.zero_tolerance = opt.zero_tol;
  tol.root_residual_tolerance = opt.root_tol;
  tol.iteration_cap = opt.iteration_cap;
  return Field(Backend::Complex, tol);
}

json exponents_json(const Multidegree& i) {
  json a = json::array();
  for (unsigned e : i) a.push_back(e);
  return a;
}

json residual_json(const ResidualOrder& r) {
  switch (r.kind) {
    case ResidualOrder::Kind::Infinite: return "infinity";
    case ResidualOrder::Kind::Exact: return to_string(r.value);
    case ResidualOrder::Kind::AtLeast: return json{{"at_least", to_string(r.value)}};
  }
  return nullptr;
}

std::string residual_text(const ResidualOrder& r) {
  switch (r.kind) {
    case ResidualOrder::Kind::Infinite: return "infinity";
    case ResidualOrder::Kind::Exact: return to_string(r.value);
    case ResidualOrder::Kind::AtLeast: return ">= " + to_string(r.value);
  }
  return "";
}

// Affine form a + <i, x> in the variable names, e.g. "1 + x + 4*y".
std::string affine_text(const Rational& a, const Multidegree& i,
                        const std::vector<std::string>& names) {
  std::vector<std::string> pieces;
  bool pure_constant = true;
  for (unsigned e : i)
    if (e != 0) pure_constant = false;
  if (a != 0 || pure_constant) pieces.push_back(to_string(a));
  for (std::size_t v = 0; v < i.size(); ++v) {
    if (i[v] == 0) continue;
    if (i[v] == 1)
      pieces.push_back(names[v]);
    else
      pieces.push_back(std::to_string(i[v]) + "*" + names[v]);
  }
  std::string out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (k > 0) out += " + ";
    out += pieces[k];
  }
  return out;
}

std::string tuple_text(const Multidegree& i) {
  std::string out = "(";
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(i[k]);
  }
  return out + ")";
}

const char* step_kind_name(LiftStep::Kind kind) {
  switch (kind) {
    case LiftStep::Kind::TrivialRoot: return "trivial-root";
    case LiftStep::Kind::ZeroPolynomial: return "zero-polynomial";
    case LiftStep::Kind::AbsentVariable: return "absent-variable";
    case LiftStep::Kind::SliceSubstitution: return "slice-substitution";
    case LiftStep::Kind::PerturbedSubstitution: return "perturbed-substitution";
    case LiftStep::Kind::UnivariateBase: return "univariate-base";
  }
  return "";
}

/* One parsed invocation: the active subcommand plus every value the
   dispatcher needs, echoing parsed inputs into doc["input"] as they are
   validated so error documents still show what was understood. */
struct Invocation {
  const Field K;
  ParsedPolynomial parsed;
  json& doc;
  const Options& opt;
  std::vector<std::string> lines;  // --pretty output

  std::size_t arity() const { return parsed.variables.size(); }

  std::vector<Rational> orders(const std::string& text) {
    auto pieces = split_commas(text, "-b");
    if (pieces.size() != arity())
      throw UsageError("-b has " + std::to_string(pieces.size()) + " entries but the polynomial has " +
                       std::to_string(arity()) + " variables");
    std::vector<Rational> out;
    for (const auto& p : pieces) out.push_back(rational_from_string(p));
    json echo = json::array();
    for (const auto& r : out) echo.push_back(to_string(r));
    doc["input"]["b"] = echo;
    return out;
  }

  std::vector<FieldElement> leading(const std::string& text) {
    auto pieces = split_commas(text, "-g");
    if (pieces.size() != arity())
      throw UsageError("-g has " + std::to_string(pieces.size()) + " entries but the polynomial has " +
                       std::to_string(arity()) + " variables");
    std::vector<FieldElement> out;
    for (const auto& p : pieces) out.push_back(field_element_from_string(K, p));
    json echo = json::array();
    for (const auto& g : out) echo.push_back(K.to_string(g));
    doc["input"]["gamma"] = echo;
    return out;
  }

  std::vector<PuiseuxSeries> point(const std::string& text) {
    auto pieces = split_commas(text, "--point");
    if (pieces.size() != arity())
      throw UsageError("--point has " + std::to_string(pieces.size()) +
                       " entries but the polynomial has " + std::to_string(arity()) +
                       " variables");
    std::vector<PuiseuxSeries> out;
    for (const auto& p : pieces) out.push_back(parse_series(K, p));
    json echo = json::array();
    for (const auto& s : out) echo.push_back(to_string(K, s));
    doc["input"]["point"] = echo;
    return out;
  }

  Rational precision(const std::string& text) {
    Rational r = rational_from_string(text);
    doc["input"]["precision"] = to_string(r);
    return r;
  }
};

void run_tropicalize(Invocation& inv) {
  TropicalPoly T = tropicalize(inv.parsed.poly);
  std::vector<Multidegree> keys;
  for (const auto& [i, a] : T.terms) keys.push_back(i);
  keys = display_order(keys);
  json terms = json::array();
  std::vector<std::string> pieces;
  for (const auto& i : keys) {
    for (const auto& [j, a] : T.terms)
      if (j == i) {
        terms.push_back({{"exponents", exponents_json(i)}, {"order", to_string(a)}});
        pieces.push_back(affine_text(a, i, inv.parsed.variables));
      }
  }
  inv.doc["result"] = {{"terms", terms}};
  std::string joined;
  for (std::size_t k = 0; k < pieces.size(); ++k)
    joined += (k ? ", " : "") + pieces[k];
  inv.lines.push_back("min{ " + joined + " }");
}

void run_eval(Invocation& inv) {
  auto b = inv.orders(inv.opt.b_text);
  TropEvalResult r = trop_eval(tropicalize(inv.parsed.poly), b);
  json argmin = json::array();
  std::string argmin_text;
  for (const auto& i : r.argmin) {
    argmin.push_back(exponents_json(i));
    argmin_text += (argmin_text.empty() ? "" : ", ") + tuple_text(i);
  }
  inv.doc["result"] = {{"value", to_string(r.value)}, {"argmin", argmin}};
  inv.lines.push_back("value = " + to_string(r.value));
  inv.lines.push_back("argmin = " + argmin_text);
}

void run_member(Invocation& inv) {
  auto b = inv.orders(inv.opt.b_text);
  bool member = is_member(tropicalize(inv.parsed.poly), b);
  inv.doc["result"] = {{"member", member}};
  inv.lines.push_back(member ? "true" : "false");
}

void run_initial_form(Invocation& inv) {
  auto b = inv.orders(inv.opt.b_text);
  FieldPoly g = initial_form(inv.parsed.poly, b);
  std::vector<Multidegree> keys;
  for (const auto& [i, c] : g.terms) keys.push_back(i);
  keys = display_order(keys);
  json terms = json::array();
  for (const auto& i : keys)
    terms.push_back({{"exponents", exponents_json(i)},
                     {"coefficient", inv.K.to_string(g.terms.at(i))}});
  std::string rendering = to_string(inv.K, g, inv.parsed.variables);
  inv.doc["result"] = {{"rendering", rendering}, {"terms", terms}};
  inv.lines.push_back(rendering);
}

void run_candidates(Invocation& inv) {
  auto candidates = newton_polygon_candidates(inv.parsed.poly);
  json list = json::array();
  std::string joined;
  for (const auto& r : candidates) {
    list.push_back(to_string(r));
    joined += (joined.empty() ? "" : ", ") + to_string(r);
  }
  inv.doc["result"] = {{"candidates", list}};
  inv.lines.push_back(candidates.empty() ? "none" : joined);
}

void run_lift(Invocation& inv) {
  LiftRequest request{inv.parsed.poly, inv.orders(inv.opt.b_text),
                      inv.leading(inv.opt.gamma_text), inv.precision(inv.opt.precision_text)};
  LiftOptions opts;
  opts.branch_cap = inv.opt.branch_cap;

  if (inv.opt.branches) {
    if (inv.arity() != 1)
      throw UsageError("--branches needs a univariate polynomial");
    auto branches = univariate_lift_branches(inv.K, request.poly, request.orders[0],
                                             request.leading[0], request.precision, opts);
    json list = json::array();
    for (const auto& br : branches) {
      list.push_back({{"root", to_string(inv.K, br.root)},
                      {"exact", br.exact},
                      {"steps", br.steps}});
      inv.lines.push_back(inv.parsed.variables[0] + " = " + to_string(inv.K, br.root) +
                          (br.exact ? "  (exact)" : ""));
    }
    inv.doc["result"] = {{"branches", list}};
    return;
  }

  LiftOutcome outcome = multivariate_lift(inv.K, request, opts);
  ResidualOrder residual = verify_root(inv.K, inv.parsed.poly, outcome.point.coords);

  json coords = json::array();
  for (std::size_t j = 0; j < outcome.point.coords.size(); ++j) {
    std::string rendered = to_string(inv.K, outcome.point.coords[j]);
    coords.push_back(rendered);
    inv.lines.push_back(inv.parsed.variables[j] + " = " + rendered);
  }
  json trace = json::array();
  for (const auto& step : outcome.trace) {
    json entry{{"kind", step_kind_name(step.kind)}};
    if (step.variable >= 0) entry["variable"] = inv.parsed.variables[step.variable];
    if (step.kind == LiftStep::Kind::PerturbedSubstitution) {
      entry["multiplicity"] = step.multiplicity;
      entry["gap"] = step.gap ? json(to_string(*step.gap)) : json(nullptr);
    }
    if (step.kind == LiftStep::Kind::UnivariateBase)
      entry["univariate_steps"] = step.univariate_steps;
    trace.push_back(entry);
  }
  inv.doc["result"] = {{"point", {{"coordinates", coords}, {"exact", outcome.point.exact}}},
                       {"residual_order", residual_json(residual)},
                       {"trace", trace}};
  inv.lines.push_back(std::string("exact = ") + (outcome.point.exact ? "true" : "false"));
  inv.lines.push_back("residual order = " + residual_text(residual));
}

void run_verify(Invocation& inv) {
  auto point = inv.point(inv.opt.point_text);
  ResidualOrder residual = verify_root(inv.K, inv.parsed.poly, point);
  inv.doc["result"] = {{"residual_order", residual_json(residual)}};
  inv.lines.push_back("residual order = " + residual_text(residual));
}

int exit_code_for(const std::string& kind) {
  if (kind == "parse-error" || kind == "usage-error" || kind == "zero-polynomial") return 2;
  return 1;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  Options opt;
  CLI::App app{"exact lifting of tropical points to Puiseux-series roots", "troplift"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool needs_b, bool is_lift, bool is_verify) {
    sub->add_option("-f,--poly", opt.poly_text, "polynomial over Puiseux-series coefficients")
        ->required();
    sub->add_option("--vars", opt.vars_text,
                    "comma-separated variable order (default: first appearance)");
    sub->add_option("--field", opt.field_name, "coefficient backend")
        ->check(CLI::IsMember({"rational", "complex"}));
    sub->add_option("--zero-tol", opt.zero_tol, "zero test tolerance (complex only)");
    sub->add_option("--root-tol", opt.root_tol, "root residual tolerance (complex only)");
    sub->add_option("--iteration-cap", opt.iteration_cap, "root solver iteration cap (complex only)");
    sub->add_flag("--pretty", opt.pretty, "human-readable output instead of JSON");
    if (needs_b) sub->add_option("-b,--orders", opt.b_text, "prescribed orders, comma-separated")->required();
    if (is_lift) {
      sub->add_option("-g,--leading", opt.gamma_text,
                      "prescribed principal coefficients, comma-separated")
          ->required();
      sub->add_option("--precision", opt.precision_text, "output truncation order")->required();
      sub->add_flag("--branches", opt.branches, "enumerate univariate branches");
      sub->add_option("--branch-cap", opt.branch_cap, "max branches to enumerate");
    }
    if (is_verify)
      sub->add_option("--point", opt.point_text, "candidate root, comma-separated series")
          ->required();
  };

  add_common(app.add_subcommand("tropicalize", "coefficient order of every monomial"), false, false, false);
  add_common(app.add_subcommand("eval", "tropical value and argmin at b"), true, false, false);
  add_common(app.add_subcommand("member", "is b on the tropical hypersurface"), true, false, false);
  add_common(app.add_subcommand("initial-form", "principal coefficients of the argmin monomials"), true, false, false);
  add_common(app.add_subcommand("candidates", "univariate root orders from the lower hull"), false, false, false);
  add_common(app.add_subcommand("lift", "root with prescribed orders and principal coefficients"), true, true, false);
  add_common(app.add_subcommand("verify", "residual order of a candidate root"), false, false, true);

  std::vector<const char*> argv;
  argv.push_back("troplift");
  for (const auto& a : args) argv.push_back(a.c_str());

  CommandResult result;
  json& doc = result.document;
  doc["command"] = nullptr;
  doc["input"] = json::object();
  doc["config"] = json::object();
  doc["result"] = nullptr;
  doc["error"] = nullptr;

  const CLI::App* sub = nullptr;
  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      result.text = app.help();
      return result;
    } catch (const CLI::CallForAllHelp&) {
      result.text = app.help("", CLI::AppFormatMode::All);
      return result;
    } catch (const CLI::ParseError& e) {
      throw UsageError(e.what());
    }
    sub = app.get_subcommands().front();
    doc["command"] = sub->get_name();

    Field K = make_field(sub, opt);
    doc["config"]["field"] = opt.field_name;
    if (K.backend() == Backend::Complex) {
      doc["config"]["zero_tolerance"] = K.tolerances().zero_tolerance;
      doc["config"]["root_residual_tolerance"] = K.tolerances().root_residual_tolerance;
      doc["config"]["iteration_cap"] = K.tolerances().iteration_cap;
    }

    std::vector<std::string> declared;
    if (!opt.vars_text.empty()) declared = split_commas(opt.vars_text, "--vars");
    ParsedPolynomial parsed = parse_polynomial(K, opt.poly_text, declared);
    doc["input"]["polynomial"] = to_string(K, parsed.poly, parsed.variables);
    doc["input"]["variables"] = parsed.variables;

    Invocation inv{std::move(K), std::move(parsed), doc, opt, {}};
    const std::string name = sub->get_name();
    if (name == "tropicalize") run_tropicalize(inv);
    else if (name == "eval") run_eval(inv);
    else if (name == "member") run_member(inv);
    else if (name == "initial-form") run_initial_form(inv);
    else if (name == "candidates") run_candidates(inv);
    else if (name == "lift") run_lift(inv);
    else run_verify(inv);

    if (opt.pretty) {
      for (std::size_t k = 0; k < inv.lines.size(); ++k)
        result.text += (k ? "\n" : "") + inv.lines[k];
    }
    return result;
  } catch (const Error& e) {
    json err{{"kind", e.kind()}, {"message", e.what()}};
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) err["position"] = p->position;
    doc["result"] = nullptr;
    doc["error"] = err;
    result.exit_code = exit_code_for(e.kind());
    if (opt.pretty) result.text = "error (" + e.kind() + "): " + e.what();
    return result;
  }
}

}  // namespace troplift::cli
