#include "gal/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gal/classification.hpp"
#include "gal/errors.hpp"
#include "gal/expr_parser.hpp"
#include "gal/intertwiner.hpp"
#include "gal/json_io.hpp"
#include "gal/laws.hpp"
#include "gal/structure_solver.hpp"
#include "gal/virasoro.hpp"
#include "gal/weight_module.hpp"

namespace gal {

namespace {

using io::Json;

struct Outcome {
  Json doc;
  int code = 0;
};

/// Re-throws library errors with `context` prepended, keeping the type and offset.
template <typename F>
auto in_context(const std::string& context, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(e.offset(), context + ": " + io::bare_message(e));
  } catch (const OutOfWindow& e) {
    throw OutOfWindow(context + ": " + e.what());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(context + ": " + e.what());
  }
}

std::string trim_left(const std::string& s) {
  auto p = s.find_first_not_of(" \t\r\n");
  return p == std::string::npos ? std::string() : s.substr(p);
}

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  return in_context(flag, [&] { return Rational::parse(text); });
}

/// Inline JSON when the text starts with '{', a file path otherwise.
Json load_json(const std::string& spec) {
  std::string text;
  if (trim_left(spec).rfind('{', 0) == 0) {
    text = spec;
  } else {
    std::ifstream in(spec, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read file '" + spec + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, std::string("invalid JSON: ") + e.what());
  }
}

GradedStructure parse_structure_spec(const std::string& flag, const std::string& spec) {
  return in_context(flag, [&] {
    if (spec == "family") return family_structure();
    if (spec.rfind("family:", 0) == 0) {
      const std::string rest = spec.substr(7);
      if (rest.rfind(kFamilyParam + "=", 0) != 0) throw ParseError(8, "expected family:g=<rational>");
      try {
        return family_structure(Rational::parse(rest.substr(2)));
      } catch (const ParseError& e) {
        throw ParseError(e.offset() + 9, io::bare_message(e));
      }
    }
    return io::structure_from_json(load_json(spec));
  });
}

struct StructureSource {
  std::string spec;
  std::optional<std::string> phi;
  std::vector<std::string> params;
};

void add_structure_options(CLI::App* sub, StructureSource& src) {
  auto* st = sub->add_option("--structure", src.spec,
                             "family:g=<rational>, family (formal g), inline JSON or a JSON file");
  auto* phi = sub->add_option("--phi", src.phi,
                              "coefficient of W_n o W_m as a polynomial in n (left), m (right) and parameters; "
                              "unary minus binds to the next atom, so -x^2 is (-x)^2");
  st->excludes(phi);
  sub->add_option("--param", src.params, "parameter binding k=<rational>, or k alone to keep it formal")
      ->take_all();
}

GradedStructure load_structure(const StructureSource& src) {
  if (src.phi) {
    Bindings bound;
    std::set<std::string> names;
    for (const auto& p : src.params) {
      auto eq = p.find('=');
      std::string name = p.substr(0, eq);
      if (!is_identifier(name) || kGradingVariables.count(name)) {
        throw InvalidArgument("--param: invalid parameter name '" + name + "'");
      }
      names.insert(name);
      if (eq != std::string::npos) bound[name] = parse_rational_flag("--param " + name, p.substr(eq + 1));
    }
    MultiPoly expr = in_context("--phi", [&] { return parse_expression(*src.phi, names); });
    for (const auto& v : expr.variables()) {
      if (v != kLeftVar && v != kRightVar && !names.count(v)) {
        throw InvalidArgument("--phi: only n, m and parameters may appear; found '" + v + "'");
      }
    }
    return GradedStructure::symbolic(std::move(expr), std::move(bound));
  }
  if (!src.params.empty()) throw InvalidArgument("--param only applies together with --phi");
  if (src.spec.empty()) throw InvalidArgument("one of --structure or --phi is required");
  return parse_structure_spec("--structure", src.spec);
}

void require_evaluable(const GradedStructure& s) {
  auto formal = s.formal_parameters();
  if (!formal.empty()) {
    throw InvalidArgument("parameter '" + *formal.begin() +
                          "' is formal; bind it with --param or use a symbolic check without --window");
  }
}

Window window_for(const GradedStructure& s, const std::optional<int>& flag) {
  if (flag) return Window(*flag);
  if (s.is_table()) return s.table_data().window();
  throw InvalidArgument("--window is required for symbolic structures");
}

/// "key=value,key=value" after a shorthand prefix; `base` is the 1-based
/// offset of the list inside the flag value.
std::map<std::string, Rational> parse_key_values(const std::string& text, std::size_t base,
                                                 const std::set<std::string>& keys) {
  std::map<std::string, Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string piece = text.substr(start, end - start);
    auto eq = piece.find('=');
    if (eq == std::string::npos) throw ParseError(base + start, "expected key=<rational>");
    const std::string key = piece.substr(0, eq);
    if (!keys.count(key)) throw ParseError(base + start, "unknown key '" + key + "'");
    try {
      out[key] = Rational::parse(piece.substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError(base + start + eq + e.offset(), io::bare_message(e));
    }
    start = end + 1;
  }
  for (const auto& k : keys) {
    if (!out.count(k)) throw ParseError(base + text.size(), "missing key '" + k + "'");
  }
  return out;
}

WeightModule parse_module_spec(const std::string& flag, const std::string& spec, const Window& check) {
  return in_context(flag, [&] {
    auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    if (colon != std::string::npos) {
      const std::string rest = spec.substr(colon + 1);
      const std::size_t base = colon + 2;
      if (head == "valpha") return WeightModule::valpha(parse_key_values(rest, base, {"alpha"}).at("alpha"));
      if (head == "vbeta") return WeightModule::vbeta(parse_key_values(rest, base, {"beta"}).at("beta"));
      if (head == "valphabeta") {
        auto kv = parse_key_values(rest, base, {"alpha", "beta"});
        return WeightModule::valphabeta(kv.at("alpha"), kv.at("beta"));
      }
      if (head == "structure") {
        try {
          return WeightModule::from_structure(parse_structure_spec("structure", rest), check);
        } catch (const ParseError& e) {
          throw ParseError(e.offset() + colon + 1, io::bare_message(e));
        }
      }
    }
    return io::module_from_json(load_json(spec), check);
  });
}

std::size_t resolve_budget(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GAL_BUDGET")) {
    std::string text(env);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() || text.find('-') != std::string::npos) {
      throw InvalidArgument("GAL_BUDGET must be a non-negative integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

std::map<long, Rational> parse_psi(const std::string& text, const Window& w) {
  std::map<long, Rational> psi;
  const bool json = trim_left(text).rfind('{', 0) == 0 || std::filesystem::is_regular_file(text);
  if (json) {
    Json j = load_json(text);
    if (j.is_object() && j.contains("psi")) j = j["psi"];
    if (!j.is_object()) throw InvalidArgument("expected an object mapping indices to rationals");
    for (const auto& [key, value] : j.items()) {
      std::size_t used = 0;
      long m = 0;
      try {
        m = std::stol(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != key.size()) throw InvalidArgument("index '" + key + "' is not an integer");
      if (!w.contains(m)) throw OutOfWindow("index " + key + " lies outside window " + std::to_string(w.radius));
      psi[m] = io::rational_from_json(value, key);
    }
    return psi;
  }
  MultiPoly expr = parse_expression(text);
  for (const auto& v : expr.variables()) {
    if (v != "m") throw InvalidArgument("psi expressions may only use m; found '" + v + "'");
  }
  for (long m = -w.radius; m <= w.radius; ++m) psi[m] = expr.eval({{"m", Rational(m)}});
  return psi;
}

CentralFamilies parse_drop(const std::vector<std::string>& drop) {
  CentralFamilies fam;
  for (const auto& name : drop) {
    auto eq = parse_central_eq(name);
    if (!eq) throw InvalidArgument("--drop: expected Vir-3, Vir-4 or Vir-5, got '" + name + "'");
    if (*eq == CentralEq::Vir3) fam.vir3 = false;
    if (*eq == CentralEq::Vir4) fam.vir4 = false;
    if (*eq == CentralEq::Vir5) fam.vir5 = false;
  }
  return fam;
}

/// Copies every member of `tail` after the members already in `head`.
Json merged(Json head, const Json& tail) {
  for (const auto& [k, v] : tail.items()) head[k] = v;
  return head;
}

Json laws_json(const GradedStructure& s, std::initializer_list<Law> laws) {
  Json j = Json::object();
  for (Law law : laws) {
    LawReport r = s.is_symbolic() ? check_law_symbolic(law, s) : check_law(law, s, s.table_data().window());
    j[law_name(law)] = r.pass();
  }
  return j;
}

int solve_code(SolveStatus status, std::size_t solutions) {
  return status == SolveStatus::Complete && solutions > 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded anti-pre-Lie structures on the Witt and Virasoro algebras", "gal"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "write the JSON report to this path instead of standard output");

  std::function<Outcome()> action;
  std::optional<int> window;
  auto add_window = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--window", window, "window radius N (indices -N..N)")->check(CLI::Range(1, 10000));
    if (required) o->required();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output, "write the JSON report to this path instead of standard output");
  };

  // check-law
  StructureSource law_src;
  std::string law_text;
  bool bracket = false;
  std::size_t max_violations = 100;
  {
    auto* sub = app.add_subcommand("check-law", "check an algebra law on a window or symbolically");
    sub->add_option("--law", law_text,
                    "witt-commutator, jacobi, anti-pre-lie, pre-lie, right-commutative, novikov, admissible-novikov")
        ->required();
    add_structure_options(sub, law_src);
    add_window(sub, false);
    sub->add_flag("--bracket", bracket, "for jacobi: the input already gives bracket constants");
    sub->add_option("--max-violations", max_violations, "maximum number of violations listed");
    add_output(sub);
    sub->callback([&] {
      action = [&] {
        auto law = parse_law(law_text);
        if (!law || *law == Law::ModuleAxiom || *law == Law::VirasoroCentral) {
          throw InvalidArgument("--law: unknown structure law '" + law_text + "'");
        }
        if (bracket && *law != Law::Jacobi) throw InvalidArgument("--bracket only applies to --law jacobi");
        GradedStructure s = load_structure(law_src);
        if (*law == Law::Jacobi && !bracket) s = bracket_of(s);
        LawReport r;
        if (window) {
          require_evaluable(s);
          r = check_law(*law, s, Window(*window));
        } else if (s.is_table()) {
          r = check_law(*law, s, s.table_data().window());
        } else {
          r = check_law_symbolic(*law, s);
        }
        return Outcome{io::to_json(r, max_violations), r.pass() ? 0 : 1};
      };
    });
  }

  // fit-gamma
  StructureSource fit_src;
  {
    auto* sub = app.add_subcommand("fit-gamma", "match a structure against the family and read off gamma");
    add_structure_options(sub, fit_src);
    add_window(sub, false);
    add_output(sub);
    sub->callback([&] {
      action = [&] {
        GradedStructure s = load_structure(fit_src);
        require_evaluable(s);
        Window w = window_for(s, window);
        FitResult f = fit_family(s, w);
        return Outcome{merged(Json{{"window", w.radius}}, io::to_json(f)), f.fits() ? 0 : 1};
      };
    });
  }

  // iso
  std::string iso_left, iso_right;
  {
    auto* sub = app.add_subcommand("iso", "decide whether two structures are isomorphic on a window");
    sub->add_option("--left", iso_left, "structure spec")->required();
    sub->add_option("--right", iso_right, "structure spec")->required();
    add_window(sub, true);
    add_output(sub);
    sub->callback([&] {
      action = [&] {
        GradedStructure a = parse_structure_spec("--left", iso_left);
        GradedStructure b = parse_structure_spec("--right", iso_right);
        require_evaluable(a);
        require_evaluable(b);
        IsoResult r = are_isomorphic(a, b, Window(*window));
        Json j;
        j["isomorphic"] = r.isomorphic;
        j["epsilon"] = r.isomorphic ? Json(r.epsilon) : Json(nullptr);
        return Outcome{j, r.isomorphic ? 0 : 1};
      };
    });
  }

  // transform
  StructureSource tr_src;
  int epsilon = 1;
  std::string lambda_text = "1";
  {
    auto* sub = app.add_subcommand("transform", "transport a structure along W_m -> eps lambda^m W_{eps m}");
    add_structure_options(sub, tr_src);
    sub->add_option("--epsilon", epsilon, "+1 or -1")->required();
    sub->add_option("--lambda", lambda_text, "nonzero rational (default 1)");
    add_window(sub, false);
    add_output(sub);
    sub->callback([&] {
      action = [&] {
        GradedStructure s = load_structure(tr_src);
        require_evaluable(s);
        Window w = window_for(s, window);
        Rational lambda = parse_rational_flag("--lambda", lambda_text);
        GradedStructure t = transform_structure(s, epsilon, lambda, w);
        Json j;
        j["epsilon"] = epsilon;
        j["lambda"] = io::to_json(lambda);
        j["structure"] = io::to_json(t);
        return Outcome{j, 0};
      };
    });
  }

  // q-transform
  StructureSource q_src;
  std::string direction_text;
  {
    auto* sub = app.add_subcommand("q-transform", "map between admissible Novikov and Novikov products");
    add_structure_options(sub, q_src);
    sub->add_option("--direction", direction_text, "to_novikov or to_admissible")->required();
    add_window(sub, false);
    add_output(sub);
    sub->callback([&] {
      action = [&] {
        auto d = parse_q_direction(direction_text);
        if (!d) throw InvalidArgument("--direction: expected to_novikov or to_admissible");
        GradedStructure s = load_structure(q_src);
        if (window) s = s.materialized(Window(*window));
        GradedStructure t = q_transform(s, *d);
        Json j;
        j["direction"] = q_direction_name(*d);
        j["structure"] = io::to_json(t);
        j["laws"] = laws_json(t, {Law::AntiPreLie, Law::AdmissibleNovikov, Law::PreLie, Law::Novikov});
        return Outcome{j, 0};
      };
    });
  }

  // module-check, module-indec
  std::string module_spec;
  const char* module_help = "valpha:alpha=<r>, vbeta:beta=<r>, valphabeta:alpha=<r>,beta=<r>, "
                            "structure:<structure spec>, inline JSON or a JSON file";
  {
    auto* sub = app.add_subcommand("module-check", "check the module axiom on a window");
    sub->add_option("--module", module_spec, module_help)->required();
    add_window(sub, true);
    sub->add_option("--max-violations", max_violations, "maximum number of violations listed");
    add_output(sub);
    sub->callback([&] {
      action = [&] {
        Window w(*window);
        WeightModule M = parse_module_spec("--module", module_spec, w);
        LawReport r = check_module_axiom(M, w);
        Json head;
        head["module"] = io::to_json(M);
        auto wp = M.weight_polynomial();
        head["weight"] = wp ? Json(format_canonical(*wp)) : Json(nullptr);
        return Outcome{merged(head, io::to_json(r, max_violations)), r.pass() ? 0 : 1};
      };
    });
  }
  {
    auto* sub = app.add_subcommand("module-indec", "decide indecomposability on a window");
    sub->add_option("--module", module_spec, module_help)->required();
    add_window(sub, true);
    add_output(sub);
    sub->callback([&] {
      action = [&] {
        Window w(*window);
        WeightModule M = parse_module_spec("--module", module_spec, w);
        IndecomposabilityResult r = check_indecomposable(M, w);
        return Outcome{io::to_json(r), r.indecomposable ? 0 : 1};
      };
    });
  }

  // intertwine
  std::string from_spec, to_spec;
  {
    auto* sub = app.add_subcommand("intertwine", "search for a module isomorphism u_i -> c_i v_{i+k}");
    sub->add_option("--from", from_spec, module_help)->required();
    sub->add_option("--to", to_spec, module_help)->required();
    add_window(sub, true);
    add_output(sub);
    sub->callback([&] {
      action = [&] {
        Window w(*window);
        WeightModule A = parse_module_spec("--from", from_spec, w);
        WeightModule B = parse_module_spec("--to", to_spec, w);
        IntertwinerResult r = find_intertwiner(A, B, w);
        Json j = io::to_json(r);
        j["verified"] = r.found() ? verify_intertwiner(A, B, w, *r.k, r.coefficients)
                                  : verify_infeasible(A, B, w, *r.infeasible);
        return Outcome{j, r.found() ? 0 : 1};
      };
    });
  }

  // solve-ansatz, solve-table
  unsigned degree = 1;
  std::string pin_text;
  std::optional<std::size_t> budget_flag;
  {
    auto* sub = app.add_subcommand("solve-ansatz", "solve the anti-pre-Lie system for a polynomial phi");
    sub->add_option("--degree", degree, "maximum total degree D (1..9)")->required();
    sub->add_option("--pin", pin_text, "value of phi(0,0)");
    sub->add_option("--budget", budget_flag, "branch budget (default GAL_BUDGET or 10000)");
    add_output(sub);
    sub->callback([&] {
      action = [&] {
        AnsatzProblem p;
        p.max_total_degree = degree;
        if (!pin_text.empty()) p.pin = parse_rational_flag("--pin", pin_text);
        p.budget = resolve_budget(budget_flag);
        AnsatzOutcome o = solve_ansatz(p);
        Json head;
        head["mode"] = "ansatz";
        head["degree"] = degree;
        head["pin"] = p.pin ? io::to_json(*p.pin) : Json(nullptr);
        head["budget"] = p.budget;
        return Outcome{merged(head, io::to_json(o)), solve_code(o.status, o.solutions.size())};
      };
    });
  }
  {
    auto* sub = app.add_subcommand("solve-table", "solve the anti-pre-Lie system for a table on a window");
    add_window(sub, true);
    sub->add_option("--pin", pin_text, "value of phi(0,0)")->required();
    sub->add_option("--budget", budget_flag, "branch budget (default GAL_BUDGET or 10000)");
    add_output(sub);
    sub->callback([&] {
      action = [&] {
        Window w(*window);
        Rational pin = parse_rational_flag("--pin", pin_text);
        std::size_t budget = resolve_budget(budget_flag);
        TableOutcome o = solve_table(w, pin, budget, true);
        Json head;
        head["mode"] = "table";
        head["window"] = w.radius;
        head["pin"] = io::to_json(pin);
        head["budget"] = budget;
        return Outcome{merged(head, io::to_json(o)), solve_code(o.status, o.solutions.size())};
      };
    });
  }

  // virasoro-check, virasoro-solve
  std::string gamma_text, psi_text;
  std::vector<std::string> drop;
  {
    auto* sub = app.add_subcommand("virasoro-check", "check the central equations for given psi");
    sub->add_option("--gamma", gamma_text, "family parameter of the W-part")->required();
    sub->add_option("--psi", psi_text,
                    "central coefficients: an expression in m, inline JSON {\"m\":\"p/q\"} or a JSON file")
        ->required();
    add_window(sub, true);
    sub->add_option("--drop", drop, "equation family to leave out: Vir-3, Vir-4 or Vir-5")->take_all();
    sub->add_option("--max-violations", max_violations, "maximum number of violations listed");
    add_output(sub);
    sub->callback([&] {
      action = [&] {
        Window w(*window);
        Rational gamma = parse_rational_flag("--gamma", gamma_text);
        auto psi = in_context("--psi", [&] { return parse_psi(psi_text, w); });
        CentralFamilies fam = parse_drop(drop);
        LawReport r = check_central({gamma, psi}, w, fam);
        bool w_part = check_central_w_part(gamma, w).pass();
        Json head;
        head["gamma"] = io::to_json(gamma);
        head["w_part_pass"] = w_part;
        return Outcome{merged(head, io::to_json(r, max_violations)), r.pass() && w_part ? 0 : 1};
      };
    });
  }
  {
    auto* sub = app.add_subcommand("virasoro-solve", "solve the central equations or certify infeasibility");
    sub->add_option("--gamma", gamma_text, "family parameter of the W-part")->required();
    add_window(sub, true);
    sub->add_option("--drop", drop, "equation family to leave out: Vir-3, Vir-4 or Vir-5")->take_all();
    add_output(sub);
    sub->callback([&] {
      action = [&] {
        Window w(*window);
        Rational gamma = parse_rational_flag("--gamma", gamma_text);
        CentralFamilies fam = parse_drop(drop);
        CentralOutcome o = solve_central(gamma, w, fam);
        Json head;
        head["gamma"] = io::to_json(gamma);
        head["window"] = w.radius;
        Json j = merged(head, io::to_json(o));
        if (o.certificate) j["certificate_verified"] = verify_certificate(gamma, w, *o.certificate);
        return Outcome{j, o.feasible ? 0 : 1};
      };
    });
  }

  // diagnostics
  StructureSource diag_src;
  {
    auto* sub = app.add_subcommand("diagnostics", "specializations of linear-2 and the zero sets of phi(m,0)");
    add_structure_options(sub, diag_src);
    add_window(sub, false);
    add_output(sub);
    sub->callback([&] {
      action = [&] {
        GradedStructure s = load_structure(diag_src);
        require_evaluable(s);
        Window w = window_for(s, window);
        return Outcome{merged(Json{{"window", w.radius}}, io::to_json(diagnostics_specializations(s, w))), 0};
      };
    });
  }

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("gal");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Outcome o = action();
    const std::string text = o.doc.dump(2) + "\n";
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file || !(file << text)) {
        err << "error: cannot write '" << output << "'\n";
        return 2;
      }
    }
    return o.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace gal
