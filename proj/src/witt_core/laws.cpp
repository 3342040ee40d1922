#include "gal/laws.hpp"

#include <array>

#include "gal/errors.hpp"

namespace gal {

namespace {

// Residual formulas, generic over index type I and value type V so the same
// text drives both the exact window scan (long, Rational) and the symbolic
// expansion (MultiPoly, MultiPoly).

template <class V, class I, class Phi>
V linear1(const Phi& phi, const I& m, const I& n) {
  return phi(m, n) - phi(n, m) - V(n - m);
}

template <class V, class I, class Phi>
V linear2(const Phi& phi, const I& m, const I& n, const I& l) {
  return V(n - m) * phi(m + n, l) - phi(m, l) * phi(n, m + l) + phi(n, l) * phi(m, n + l);
}

template <class V, class I, class Phi>
V anti1(const Phi& phi, const I& m, const I& n, const I& l) {
  return phi(n, l) * phi(m, n + l) - phi(m, l) * phi(n, m + l) - (phi(n, m) - phi(m, n)) * phi(m + n, l);
}

template <class V, class I, class Phi>
V associator(const Phi& phi, const I& m, const I& n, const I& l) {
  return phi(m, n) * phi(m + n, l) - phi(n, l) * phi(m, n + l);
}

template <class V, class I, class Phi>
V pre_lie(const Phi& phi, const I& m, const I& n, const I& l) {
  return associator<V>(phi, m, n, l) - associator<V>(phi, n, m, l);
}

template <class V, class I, class Phi>
V right_commutative(const Phi& phi, const I& m, const I& n, const I& l) {
  return phi(m, n) * phi(m + n, l) - phi(m, l) * phi(m + l, n);
}

// Argument order (n, m, l): x = W_n, y = W_m, z = W_l in
// (x o y) o z - (x o z) o y = 2 x o (y o z - z o y).
template <class V, class I, class Phi>
V admissible(const Phi& phi, const I& n, const I& m, const I& l) {
  return phi(n, m) * phi(n + m, l) - phi(n, l) * phi(n + l, m) - V(2) * phi(n, m + l) * (phi(m, l) - phi(l, m));
}

template <class V, class I, class Phi>
V jacobi(const Phi& b, const I& m, const I& n, const I& l) {
  return b(m, n) * b(m + n, l) + b(n, l) * b(n + l, m) + b(l, m) * b(l + m, n);
}

enum class Clause { Linear1, Linear2, Anti1, PreLie, RightCommutative, Admissible, Jacobi };

struct ClauseInfo {
  const char* name;
  int arity;
  std::array<const char*, 3> vars;
};

ClauseInfo info(Clause c) {
  switch (c) {
    case Clause::Linear1: return {"linear-1", 2, {"m", "n", ""}};
    case Clause::Linear2: return {"linear-2", 3, {"m", "n", "l"}};
    case Clause::Anti1: return {"anti-1", 3, {"m", "n", "l"}};
    case Clause::PreLie: return {"pre-lie", 3, {"m", "n", "l"}};
    case Clause::RightCommutative: return {"right-commutative", 3, {"m", "n", "l"}};
    case Clause::Admissible: return {"admissible", 3, {"n", "m", "l"}};
    case Clause::Jacobi: return {"jacobi", 3, {"m", "n", "l"}};
  }
  return {"", 0, {"", "", ""}};
}

template <class V, class I, class Phi>
V residual(Clause c, const Phi& phi, const I& a, const I& b, const I& d) {
  switch (c) {
    case Clause::Linear1: return linear1<V>(phi, a, b);
    case Clause::Linear2: return linear2<V>(phi, a, b, d);
    case Clause::Anti1: return anti1<V>(phi, a, b, d);
    case Clause::PreLie: return pre_lie<V>(phi, a, b, d);
    case Clause::RightCommutative: return right_commutative<V>(phi, a, b, d);
    case Clause::Admissible: return admissible<V>(phi, a, b, d);
    case Clause::Jacobi: return jacobi<V>(phi, a, b, d);
  }
  return V();
}

std::vector<Clause> clauses_of(Law law) {
  switch (law) {
    case Law::WittCommutator: return {Clause::Linear1};
    case Law::AntiPreLie: return {Clause::Linear1, Clause::Linear2};
    case Law::Jacobi: return {Clause::Jacobi};
    case Law::PreLie: return {Clause::PreLie};
    case Law::RightCommutative: return {Clause::RightCommutative};
    case Law::Novikov: return {Clause::PreLie, Clause::RightCommutative};
    case Law::AdmissibleNovikov: return {Clause::Anti1, Clause::Admissible};
    default: break;
  }
  throw InvalidArgument("law '" + law_name(law) + "' is not a structure law");
}

/// Table lookup that records whether an instance left the table domain.
struct TablePhi {
  const StructureTable* table;
  mutable bool ok = true;

  Rational operator()(long a, long b) const {
    const Rational* v = table->find(a, b);
    if (v == nullptr) {
      ok = false;
      return Rational();
    }
    return *v;
  }
};

void scan_clause(Clause c, const StructureTable& table, LawReport& report) {
  const ClauseInfo ci = info(c);
  const int r = table.window().radius;
  TablePhi phi{&table};
  auto visit = [&](long a, long b, long d) {
    phi.ok = true;
    Rational value = residual<Rational>(c, phi, a, b, d);
    if (!phi.ok) {
      ++report.skipped;
      return;
    }
    ++report.checked;
    if (!value.is_zero()) {
      Violation v{ci.name, {{ci.vars[0], a}, {ci.vars[1], b}}, value};
      if (ci.arity == 3) v.indices.emplace_back(ci.vars[2], d);
      report.violations.push_back(std::move(v));
    }
  };
  for (long a = -r; a <= r; ++a) {
    for (long b = -r; b <= r; ++b) {
      if (ci.arity == 2) {
        visit(a, b, 0);
        continue;
      }
      for (long d = -r; d <= r; ++d) visit(a, b, d);
    }
  }
}

void require_antisymmetric(const GradedStructure& bracket) {
  if (bracket.is_symbolic()) {
    const MultiPoly n = MultiPoly::variable(kLeftVar);
    const MultiPoly m = MultiPoly::variable(kRightVar);
    MultiPoly sum = bracket.phi_symbolic(n, m) + bracket.phi_symbolic(m, n);
    if (!sum.is_zero()) throw InvalidArgument("bracket constants are not antisymmetric");
    return;
  }
  const StructureTable& t = bracket.table_data();
  for (auto [a, b] : t.domain()) {
    if (!(t.at(a, b) + t.at(b, a)).is_zero()) {
      throw InvalidArgument("bracket constants are not antisymmetric at (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
    }
  }
}

}  // namespace

std::string law_name(Law law) {
  switch (law) {
    case Law::WittCommutator: return "witt-commutator";
    case Law::Jacobi: return "jacobi";
    case Law::AntiPreLie: return "anti-pre-lie";
    case Law::PreLie: return "pre-lie";
    case Law::RightCommutative: return "right-commutative";
    case Law::Novikov: return "novikov";
    case Law::AdmissibleNovikov: return "admissible-novikov";
    case Law::ModuleAxiom: return "module-axiom";
    case Law::VirasoroCentral: return "virasoro-central";
  }
  return "";
}

std::optional<Law> parse_law(std::string_view name) {
  for (Law law : {Law::WittCommutator, Law::Jacobi, Law::AntiPreLie, Law::PreLie, Law::RightCommutative, Law::Novikov,
                  Law::AdmissibleNovikov, Law::ModuleAxiom, Law::VirasoroCentral}) {
    if (law_name(law) == name) return law;
  }
  return std::nullopt;
}

long Violation::index(const std::string& name) const {
  for (const auto& [k, v] : indices) {
    if (k == name) return v;
  }
  throw InvalidArgument("violation has no index '" + name + "'");
}

bool LawReport::pass() const {
  if (!violations.empty()) return false;
  if (symbolic_residuals) {
    for (const auto& r : *symbolic_residuals) {
      if (!r.residual.is_zero()) return false;
    }
  }
  return true;
}

void LawReport::absorb(LawReport other) {
  checked += other.checked;
  skipped += other.skipped;
  for (auto& v : other.violations) violations.push_back(std::move(v));
  if (other.symbolic_residuals) {
    if (!symbolic_residuals) symbolic_residuals.emplace();
    for (auto& r : *other.symbolic_residuals) symbolic_residuals->push_back(std::move(r));
  }
  if (!window) window = other.window;
}

LawReport check_law(Law law, const GradedStructure& s, const Window& w) {
  const auto clauses = clauses_of(law);
  if (law == Law::Jacobi) require_antisymmetric(s);
  StructureTable table = s.materialize(w);
  LawReport report;
  report.law = law;
  report.window = w;
  for (Clause c : clauses) scan_clause(c, table, report);
  return report;
}

LawReport check_witt_commutator(const GradedStructure& s, const Window& w) {
  return check_law(Law::WittCommutator, s, w);
}
LawReport check_anti_pre_lie(const GradedStructure& s, const Window& w) { return check_law(Law::AntiPreLie, s, w); }
LawReport check_pre_lie(const GradedStructure& s, const Window& w) { return check_law(Law::PreLie, s, w); }
LawReport check_right_commutative(const GradedStructure& s, const Window& w) {
  return check_law(Law::RightCommutative, s, w);
}
LawReport check_novikov(const GradedStructure& s, const Window& w) { return check_law(Law::Novikov, s, w); }
LawReport check_admissible_novikov(const GradedStructure& s, const Window& w) {
  return check_law(Law::AdmissibleNovikov, s, w);
}
LawReport check_jacobi(const GradedStructure& bracket, const Window& w) { return check_law(Law::Jacobi, bracket, w); }

LawReport check_law_symbolic(Law law, const GradedStructure& s) {
  const auto clauses = clauses_of(law);
  if (!s.is_symbolic()) throw InvalidArgument("table structures cannot be checked symbolically");
  if (law == Law::Jacobi) require_antisymmetric(s);
  auto phi = [&](const MultiPoly& a, const MultiPoly& b) { return s.phi_symbolic(a, b); };
  LawReport report;
  report.law = law;
  report.symbolic_residuals.emplace();
  for (Clause c : clauses) {
    const ClauseInfo ci = info(c);
    const MultiPoly x = MultiPoly::variable(ci.vars[0]);
    const MultiPoly y = MultiPoly::variable(ci.vars[1]);
    const MultiPoly z = ci.arity == 3 ? MultiPoly::variable(ci.vars[2]) : MultiPoly();
    report.symbolic_residuals->push_back({ci.name, residual<MultiPoly>(c, phi, x, y, z)});
  }
  return report;
}

GradedStructure bracket_of(const GradedStructure& s) {
  if (s.is_symbolic()) {
    const MultiPoly n = MultiPoly::variable(kLeftVar);
    const MultiPoly m = MultiPoly::variable(kRightVar);
    const MultiPoly& e = s.expression();
    MultiPoly swapped = e.substitute({{kLeftVar, m}, {kRightVar, n}});
    return GradedStructure::symbolic(e - swapped, s.bindings());
  }
  const StructureTable& t = s.table_data();
  StructureTable out(t.window());
  for (auto [a, b] : t.domain()) out.set(a, b, t.at(a, b) - t.at(b, a));
  return GradedStructure::table(std::move(out));
}

}  // namespace gal
