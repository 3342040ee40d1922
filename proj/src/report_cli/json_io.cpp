#include "gal/json_io.hpp"

#include <set>

#include "gal/errors.hpp"
#include "gal/expr_parser.hpp"

namespace gal::io {

namespace {

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object()) throw InvalidArgument("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument("missing field '" + key + "'");
  return *it;
}

long integer_field(const Json& j, const std::string& key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InvalidArgument("field '" + key + "' must be an integer");
  return v.get<long>();
}

std::string string_field(const Json& j, const std::string& key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw InvalidArgument("field '" + key + "' must be a string");
  return v.get<std::string>();
}

Window window_field(const Json& j, const std::string& key) {
  long r = integer_field(j, key);
  if (r < 1 || r > 10000) throw InvalidArgument("field '" + key + "' must be a radius between 1 and 10000");
  return Window(static_cast<int>(r));
}

/// Parameters object: values are rationals or null (formal).
Bindings params_field(const Json& j, std::set<std::string>& names) {
  Bindings b;
  auto it = j.find("params");
  if (it == j.end()) return b;
  if (!it->is_object()) throw InvalidArgument("field 'params' must be an object");
  for (const auto& [name, value] : it->items()) {
    if (!is_identifier(name) || kGradingVariables.count(name)) {
      throw InvalidArgument("invalid parameter name '" + name + "'");
    }
    names.insert(name);
    if (!value.is_null()) b[name] = rational_from_json(value, "params." + name);
  }
  return b;
}

Json params_json(const Bindings& bound, const std::set<std::string>& formal) {
  Json p = Json::object();
  std::set<std::string> all(formal);
  for (const auto& [k, v] : bound) all.insert(k);
  for (const auto& name : all) {
    auto it = bound.find(name);
    p[name] = it == bound.end() ? Json(nullptr) : to_json(it->second);
  }
  return p;
}

MultiPoly parse_expr_field(const Json& j, const std::set<std::string>& names) {
  std::string text = string_field(j, "expr");
  try {
    return parse_expression(text, names);
  } catch (const ParseError& e) {
    throw ParseError(e.offset(), "in field 'expr': " + bare_message(e));
  }
}

Json steps_json(const std::vector<PropagationStep>& steps) {
  Json a = Json::array();
  for (const auto& s : steps) a.push_back({{"m", s.m}, {"i", s.i}, {"from", s.from}, {"to", s.to}});
  return a;
}

Json search_log_json(const SearchLog& log) {
  return {{"nodes", log.nodes}, {"pruned", log.pruned}, {"stalled", log.stalled}, {"duplicates", log.duplicates}};
}

}  // namespace

std::string bare_message(const ParseError& e) {
  std::string msg = e.what();
  auto p = msg.find(": ");
  return p == std::string::npos ? msg : msg.substr(p + 2);
}

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& name) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InvalidArgument("field '" + name + "' must be a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.offset(), "in field '" + name + "': " + bare_message(e));
  }
}

Json to_json(const GradedStructure& s) {
  Json j;
  if (s.is_symbolic()) {
    j["kind"] = "symbolic";
    j["expr"] = format_canonical(s.expression());
    j["params"] = params_json(s.bindings(), s.formal_parameters());
    return j;
  }
  const auto& t = s.table_data();
  j["kind"] = "table";
  j["window"] = t.window().radius;
  Json entries = Json::array();
  for (const auto& [a, b] : t.domain()) {
    entries.push_back({{"n", a}, {"m", b}, {"value", to_json(t.at(a, b))}});
  }
  j["entries"] = std::move(entries);
  return j;
}

GradedStructure structure_from_json(const Json& j) {
  std::string kind = string_field(j, "kind");
  if (kind == "symbolic") {
    std::set<std::string> names;
    Bindings b = params_field(j, names);
    MultiPoly expr = parse_expr_field(j, names);
    for (const auto& v : expr.variables()) {
      if (v != kLeftVar && v != kRightVar && !names.count(v)) {
        throw InvalidArgument("structure expressions may only use n, m and parameters; found '" + v + "'");
      }
    }
    return GradedStructure::symbolic(std::move(expr), std::move(b));
  }
  if (kind == "table") {
    Window w = window_field(j, "window");
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) throw InvalidArgument("field 'entries' must be an array");
    StructureTable t(w);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const Json& e = entries[k];
      long a = integer_field(e, "n");
      long b = integer_field(e, "m");
      if (!t.contains(a, b)) {
        throw OutOfWindow("entry " + std::to_string(k) + " (n=" + std::to_string(a) + ", m=" + std::to_string(b) +
                          ") lies outside window " + std::to_string(w.radius));
      }
      if (t.has(a, b)) throw InvalidArgument("entry " + std::to_string(k) + " repeats a pair");
      t.set(a, b, rational_from_json(field(e, "value"), "entries[" + std::to_string(k) + "].value"));
    }
    return GradedStructure::table(std::move(t));
  }
  throw InvalidArgument("unknown structure kind '" + kind + "'");
}

Json to_json(const Violation& v) {
  Json j;
  for (const auto& [name, value] : v.indices) j[name] = value;
  j["clause"] = v.clause;
  j["residual"] = to_json(v.residual);
  return j;
}

Json to_json(const LawReport& r, std::size_t max_violations) {
  Json j;
  j["law"] = law_name(r.law);
  j["mode"] = r.symbolic_residuals ? "symbolic" : "window";
  j["window"] = r.window ? Json(r.window->radius) : Json(nullptr);
  j["checked"] = r.checked;
  j["skipped"] = r.skipped;
  Json vs = Json::array();
  for (std::size_t k = 0; k < r.violations.size() && k < max_violations; ++k) vs.push_back(to_json(r.violations[k]));
  j["violations"] = std::move(vs);
  j["violation_count"] = r.violations.size();
  if (r.symbolic_residuals) {
    Json rs = Json::array();
    for (const auto& s : *r.symbolic_residuals) rs.push_back({{"clause", s.clause}, {"residual", format_canonical(s.residual)}});
    j["symbolic_residuals"] = std::move(rs);
  }
  j["pass"] = r.pass();
  return j;
}

WeightModule module_from_json(const Json& j, const Window& check) {
  std::string kind = string_field(j, "kind");
  if (kind == "family") kind = string_field(j, "family");
  if (kind == "valpha") return WeightModule::valpha(rational_from_json(field(j, "alpha"), "alpha"));
  if (kind == "vbeta") return WeightModule::vbeta(rational_from_json(field(j, "beta"), "beta"));
  if (kind == "valphabeta") {
    return WeightModule::valphabeta(rational_from_json(field(j, "alpha"), "alpha"),
                                    rational_from_json(field(j, "beta"), "beta"));
  }
  if (kind == "from-structure") return WeightModule::from_structure(structure_from_json(field(j, "structure")), check);
  if (kind == "expr") {
    std::set<std::string> names;
    Bindings b = params_field(j, names);
    MultiPoly expr = parse_expr_field(j, names);
    std::optional<int> radius;
    if (j.contains("radius")) radius = window_field(j, "radius").radius;
    return WeightModule::from_expression(std::move(expr), std::move(b), radius);
  }
  throw InvalidArgument("unknown module kind '" + kind + "'");
}

Json to_json(const WeightModule& M) {
  Json j;
  switch (M.kind()) {
    case WeightModule::Kind::VAlpha:
      j["kind"] = "valpha";
      j["alpha"] = to_json(*M.alpha());
      break;
    case WeightModule::Kind::VBeta:
      j["kind"] = "vbeta";
      j["beta"] = to_json(*M.beta());
      break;
    case WeightModule::Kind::VAlphaBeta:
      j["kind"] = "valphabeta";
      j["alpha"] = to_json(*M.alpha());
      j["beta"] = to_json(*M.beta());
      break;
    case WeightModule::Kind::FromStructure:
      j["kind"] = "from-structure";
      j["structure"] = to_json(M.structure());
      break;
    case WeightModule::Kind::Custom:
      if (M.expression()) {
        j["kind"] = "expr";
        j["expr"] = format_canonical(*M.expression());
        j["params"] = params_json(M.bindings(), {});
      } else {
        j["kind"] = "custom";
        j["label"] = M.label();
      }
      if (M.radius()) j["radius"] = *M.radius();
      break;
  }
  return j;
}

Json to_json(const FitResult& f) {
  Json j;
  j["fits"] = f.fits();
  if (f.gamma) j["gamma"] = to_json(*f.gamma);
  if (f.mismatch) {
    j["mismatch"] = {{"n", f.mismatch->left}, {"m", f.mismatch->right}, {"residual", to_json(f.mismatch->residual)}};
  }
  return j;
}

Json to_json(const Diagnostics& d) {
  Json eqs = Json::array();
  for (const auto& e : d.equations) {
    Json rs = Json::array();
    for (const auto& v : e.residuals) rs.push_back(to_json(v));
    eqs.push_back({{"name", e.name}, {"checked", e.checked}, {"pass", e.residuals.empty()}, {"residuals", std::move(rs)}});
  }
  Json j;
  j["equations"] = std::move(eqs);
  j["gamma1"] = d.gamma1;
  j["gamma2"] = d.gamma2;
  return j;
}

Json to_json(const IndecomposabilityResult& r) {
  Json j;
  j["window"] = r.window.radius;
  j["indecomposable"] = r.indecomposable;
  j["components"] = r.components;
  return j;
}

Json to_json(const IntertwinerResult& r) {
  Json j;
  j["window"] = r.window.radius;
  j["found"] = r.found();
  j["k"] = r.k ? Json(*r.k) : Json(nullptr);
  if (r.found()) {
    Json c = Json::object();
    for (const auto& [i, v] : r.coefficients) c[std::to_string(i)] = to_json(v);
    j["coefficients"] = std::move(c);
    j["free_indices"] = r.free_indices;
    return j;
  }
  const auto& f = *r.infeasible;
  Json inf;
  inf["kind"] = infeasible_kind_name(f.kind);
  inf["message"] = f.message;
  switch (f.kind) {
    case IntertwinerInfeasible::Kind::NoShift:
      inf["weight"] = to_json(f.lhs_coef);
      break;
    case IntertwinerInfeasible::Kind::WeightMismatch:
      inf["i"] = f.i;
      inf["lhs_coef"] = to_json(f.lhs_coef);
      inf["rhs_coef"] = to_json(f.rhs_coef);
      break;
    case IntertwinerInfeasible::Kind::InconsistentRatio:
      inf["m"] = f.m;
      inf["i"] = f.i;
      inf["lhs_coef"] = to_json(f.lhs_coef);
      inf["rhs_coef"] = to_json(f.rhs_coef);
      inf["c_i"] = to_json(f.c_i);
      inf["c_mi"] = to_json(f.c_mi);
      inf["root"] = f.root;
      inf["chain_i"] = steps_json(f.chain_i);
      inf["chain_mi"] = steps_json(f.chain_mi);
      break;
    case IntertwinerInfeasible::Kind::ForcedZero:
      inf["m"] = f.m;
      inf["i"] = f.i;
      inf["lhs_coef"] = to_json(f.lhs_coef);
      inf["rhs_coef"] = to_json(f.rhs_coef);
      break;
  }
  j["infeasible"] = std::move(inf);
  return j;
}

Json to_json(const AnsatzOutcome& o) {
  Json j;
  j["status"] = solve_status_name(o.status);
  Json sols = Json::array();
  for (const auto& s : o.solutions) {
    Json rel = Json::array();
    for (const auto& [name, value] : s.relations) rel.push_back({{"coefficient", name}, {"value", format_canonical(value)}});
    sols.push_back({{"structure", to_json(s.structure())}, {"free_parameters", s.free_parameters}, {"relations", std::move(rel)}});
  }
  j["solutions"] = std::move(sols);
  j["search_log"] = search_log_json(o.log);
  j["frontier"] = o.frontier;
  return j;
}

Json to_json(const TableOutcome& o) {
  Json j;
  j["status"] = solve_status_name(o.status);
  Json sols = Json::array();
  for (const auto& s : o.solutions) sols.push_back(to_json(s));
  j["solutions"] = std::move(sols);
  j["search_log"] = search_log_json(o.log);
  j["frontier"] = o.frontier;
  j["uniqueness_radius"] = o.uniqueness_radius ? Json(*o.uniqueness_radius) : Json(nullptr);
  return j;
}

Json to_json(const InfeasibilityCertificate& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    Json row;
    row["eq"] = central_eq_name(r.eq);
    row["m"] = r.m;
    if (r.eq == CentralEq::Vir4) row["n"] = r.n;
    row["coef"] = to_json(r.coef);
    rows.push_back(std::move(row));
  }
  return {{"rows", std::move(rows)}, {"contradiction", to_json(c.contradiction)}};
}

Json to_json(const CentralOutcome& o) {
  Json j;
  j["feasible"] = o.feasible;
  if (o.feasible) {
    Json psi = Json::object();
    for (const auto& [m, v] : o.psi) psi[std::to_string(m)] = to_json(v);
    j["psi"] = std::move(psi);
    j["free_indices"] = o.free_indices;
  } else if (o.certificate) {
    j["certificate"] = to_json(*o.certificate);
  }
  j["rows_used"] = o.rows_used;
  return j;
}

}  // namespace gal::io
