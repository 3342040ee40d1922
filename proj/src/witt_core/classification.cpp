#include "gal/classification.hpp"

#include "gal/errors.hpp"
#include "gal/expr_parser.hpp"

namespace gal {

namespace {

MultiPoly swap_arguments(const MultiPoly& e) {
  return e.substitute({{kLeftVar, MultiPoly::variable(kRightVar)}, {kRightVar, MultiPoly::variable(kLeftVar)}});
}

std::vector<std::pair<long, long>> fit_order(const Window& w) {
  const auto order = outward_order(w);
  std::vector<std::pair<long, long>> out;
  for (int a : order) out.emplace_back(a, 0);
  for (int a : order) {
    for (int b : order) {
      if (b != 0 && in_table_domain(w, a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

GradedStructure family_structure(std::optional<Rational> gamma) {
  MultiPoly expr = parse_expression("-(g + m + 2*n)", {kFamilyParam});
  Bindings b;
  if (gamma) b.emplace(kFamilyParam, *gamma);
  return GradedStructure::symbolic(std::move(expr), std::move(b));
}

FitResult fit_family(const GradedStructure& s, const Window& w) {
  const StructureTable t = s.materialize(w);
  const Rational gamma = -t.at(0, 0);
  FitResult out;
  for (auto [a, b] : fit_order(w)) {
    Rational r = t.at(a, b) + gamma + Rational(b) + Rational(2 * a);
    if (!r.is_zero()) {
      out.mismatch = FamilyMismatch{a, b, r};
      return out;
    }
  }
  out.gamma = gamma;
  return out;
}

GradedStructure transform_structure(const GradedStructure& s, int epsilon, const Rational& lambda, const Window& w) {
  if (epsilon != 1 && epsilon != -1) throw InvalidArgument("epsilon must be 1 or -1");
  if (lambda.is_zero()) throw InvalidArgument("lambda must be nonzero");
  const StructureTable t = s.materialize(w);
  if (epsilon == 1) return GradedStructure::table(t);
  StructureTable out(w);
  for (auto [a, b] : t.domain()) out.set(a, b, -t.at(-a, -b));
  return GradedStructure::table(std::move(out));
}

IsoResult are_isomorphic(const GradedStructure& s1, const GradedStructure& s2, const Window& w) {
  const StructureTable t1 = s1.materialize(w);
  if (t1 == s2.materialize(w)) return {true, 1};
  if (t1 == transform_structure(s2, -1, Rational(1), w).table_data()) return {true, -1};
  return {false, 0};
}

std::string q_direction_name(QDirection d) { return d == QDirection::ToNovikov ? "to_novikov" : "to_admissible"; }

std::optional<QDirection> parse_q_direction(std::string_view name) {
  if (name == "to_novikov" || name == "to-novikov") return QDirection::ToNovikov;
  if (name == "to_admissible" || name == "to-admissible") return QDirection::ToAdmissible;
  return std::nullopt;
}

GradedStructure q_transform(const GradedStructure& s, QDirection d) {
  auto combine = [d](const auto& direct, const auto& swapped) {
    if (d == QDirection::ToNovikov) return (direct - swapped * Rational(2)) * Rational(-1, 3);
    return direct + swapped * Rational(2);
  };
  if (s.is_symbolic()) {
    const MultiPoly& e = s.expression();
    return GradedStructure::symbolic(combine(e, swap_arguments(e)), s.bindings());
  }
  const StructureTable& t = s.table_data();
  StructureTable out(t.window());
  for (auto [a, b] : t.domain()) out.set(a, b, combine(t.at(a, b), t.at(b, a)));
  return GradedStructure::table(std::move(out));
}

Diagnostics diagnostics_specializations(const GradedStructure& s, const Window& w) {
  const StructureTable t = s.materialize(w);
  const int r = w.radius;
  Diagnostics out;

  struct Lookup {
    const StructureTable& t;
    bool ok = true;
    Rational operator()(long a, long b) {
      const Rational* v = t.find(a, b);
      if (v == nullptr) {
        ok = false;
        return Rational();
      }
      return *v;
    }
  };

  auto scan2 = [&](const std::string& name, const char* x, const char* y, auto formula) {
    Diagnostics::Entry e{name, 0, {}};
    for (long a = -r; a <= r; ++a) {
      for (long b = -r; b <= r; ++b) {
        Lookup phi{t};
        Rational v = formula(phi, a, b);
        if (!phi.ok) continue;
        ++e.checked;
        if (!v.is_zero()) e.residuals.push_back({name, {{x, a}, {y, b}}, v});
      }
    }
    out.equations.push_back(std::move(e));
  };
  auto scan1 = [&](const std::string& name, const char* x, auto formula) {
    Diagnostics::Entry e{name, 0, {}};
    for (long a = -r; a <= r; ++a) {
      Lookup phi{t};
      Rational v = formula(phi, a);
      if (!phi.ok) continue;
      ++e.checked;
      if (!v.is_zero()) e.residuals.push_back({name, {{x, a}}, v});
    }
    out.equations.push_back(std::move(e));
  };

  auto linear2_at = [](long l) {
    return [l](Lookup& phi, long m, long n) {
      return Rational(n - m) * phi(m + n, l) - phi(m, l) * phi(n, m + l) + phi(n, l) * phi(m, n + l);
    };
  };
  scan2("l=0", "m", "n", linear2_at(0));
  scan2("l=1", "m", "n", linear2_at(1));
  scan2("l=2", "m", "n", linear2_at(2));
  scan2("m=0", "n", "l",
        [](Lookup& phi, long n, long l) { return (phi(0, l) - phi(0, n + l) - Rational(n)) * phi(n, l); });
  scan1("m=l=0", "n", [](Lookup& phi, long n) { return (phi(0, 0) - phi(0, n) - Rational(n)) * phi(n, 0); });
  scan1("column-0", "m", [](Lookup& phi, long m) { return phi(m, 0) + Rational(2 * m) - phi(0, 0); });

  for (long m = -r; m <= r; ++m) {
    if (t.at(m, 0).is_zero()) out.gamma1.push_back(m);
    if (t.at(m, 0) + Rational(2 * m) == t.at(0, 0)) out.gamma2.push_back(m);
  }
  return out;
}

}  // namespace gal
