#include "gal/weight_module.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gal/errors.hpp"

namespace gal {

WeightModule WeightModule::valpha(Rational alpha) {
  WeightModule M;
  M.kind_ = Kind::VAlpha;
  M.label_ = "valpha";
  M.alpha_ = alpha;
  M.coeff_ = [alpha](long m, long i) -> Rational {
    if (i != 0) return Rational(m + i);
    return Rational(m) * (alpha + Rational(m));
  };
  return M;
}

WeightModule WeightModule::vbeta(Rational beta) {
  WeightModule M;
  M.kind_ = Kind::VBeta;
  M.label_ = "vbeta";
  M.beta_ = beta;
  M.coeff_ = [beta](long m, long i) -> Rational {
    if (m + i != 0) return Rational(i);
    return -Rational(m) * (beta + Rational(m));
  };
  return M;
}

WeightModule WeightModule::valphabeta(Rational alpha, Rational beta) {
  WeightModule M;
  M.kind_ = Kind::VAlphaBeta;
  M.label_ = "valphabeta";
  M.alpha_ = alpha;
  M.beta_ = beta;
  M.coeff_ = [alpha, beta](long m, long i) { return alpha + Rational(i) + Rational(m) * beta; };
  return M;
}

WeightModule WeightModule::from_structure(GradedStructure s, std::optional<Window> check) {
  if (!s.evaluable()) throw UnboundVariable(*s.formal_parameters().begin());
  WeightModule M;
  M.kind_ = Kind::FromStructure;
  M.label_ = "from-structure";
  if (s.is_table()) {
    M.radius_ = s.table_data().window().radius;
    if (!check) check = s.table_data().window();
  }
  M.structure_ = std::make_shared<const GradedStructure>(std::move(s));
  auto st = M.structure_;
  M.coeff_ = [st](long m, long n) { return -st->phi(m, n); };
  if (check) M.require_distinct_weights(*check);
  return M;
}

WeightModule WeightModule::from_expression(MultiPoly expr, Bindings bindings, std::optional<int> radius) {
  for (const auto& v : expr.bind(bindings).variables()) {
    if (v != "m" && v != "i") throw UnboundVariable(v);
  }
  WeightModule M;
  M.kind_ = Kind::Custom;
  M.label_ = "expr";
  M.radius_ = radius;
  MultiPoly bound = expr.bind(bindings);
  M.expr_ = std::move(expr);
  M.bindings_ = std::move(bindings);
  M.coeff_ = [bound](long m, long i) { return bound.eval({{"m", Rational(m)}, {"i", Rational(i)}}); };
  return M;
}

WeightModule WeightModule::custom(std::string label, std::function<Rational(long, long)> a, std::optional<int> radius) {
  WeightModule M;
  M.kind_ = Kind::Custom;
  M.label_ = std::move(label);
  M.radius_ = radius;
  M.coeff_ = std::move(a);
  return M;
}

const GradedStructure& WeightModule::structure() const {
  if (!structure_) throw InvalidArgument("module is not built from a structure");
  return *structure_;
}

bool WeightModule::defined(long m, long i) const {
  if (!radius_) return true;
  return in_table_domain(Window(*radius_), m, i);
}

Rational WeightModule::a(long m, long i) const {
  if (!defined(m, i)) {
    throw OutOfWindow("module coefficient a(" + std::to_string(m) + "," + std::to_string(i) +
                      ") is outside radius " + std::to_string(*radius_));
  }
  return coeff_(m, i);
}

std::optional<MultiPoly> WeightModule::weight_polynomial() const {
  const MultiPoly i = MultiPoly::variable("i");
  switch (kind_) {
    case Kind::VAlpha:
    case Kind::VBeta:
      return i;
    case Kind::VAlphaBeta:
      return MultiPoly(*alpha_) + i;
    case Kind::FromStructure:
      if (structure_->is_symbolic()) return -structure_->phi_symbolic(MultiPoly(0), i);
      return std::nullopt;
    case Kind::Custom:
      if (expr_) return expr_->bind(bindings_).substitute({{"m", MultiPoly(0)}});
      return std::nullopt;
  }
  return std::nullopt;
}

void WeightModule::require_distinct_weights(const Window& w) const {
  std::map<Rational, long> seen;
  for (long i = -w.radius; i <= w.radius; ++i) {
    if (!defined(0, i)) continue;
    auto [it, inserted] = seen.emplace(weight(i), i);
    if (!inserted) {
      throw InvalidArgument("weights of v_" + std::to_string(it->second) + " and v_" + std::to_string(i) +
                            " coincide (" + it->first.str() + ")");
    }
  }
}

LawReport check_module_axiom(const WeightModule& M, const Window& w) {
  LawReport report;
  report.law = Law::ModuleAxiom;
  report.window = w;
  const long r = w.radius;
  auto ok = [&](long m, long i) { return in_table_domain(w, m, i) && M.defined(m, i); };
  for (long m = -r; m <= r; ++m) {
    for (long n = -r; n <= r; ++n) {
      for (long i = -r; i <= r; ++i) {
        if (!ok(n, i) || !ok(m, n + i) || !ok(m, i) || !ok(n, m + i) || !ok(m + n, i)) {
          ++report.skipped;
          continue;
        }
        ++report.checked;
        Rational res = M.a(n, i) * M.a(m, n + i) - M.a(m, i) * M.a(n, m + i) - Rational(n - m) * M.a(m + n, i);
        if (!res.is_zero()) report.violations.push_back({"module-axiom", {{"m", m}, {"n", n}, {"i", i}}, res});
      }
    }
  }
  return report;
}

IndecomposabilityResult check_indecomposable(const WeightModule& M, const Window& w) {
  const long r = w.radius;
  std::vector<long> parent(static_cast<std::size_t>(w.size()));
  std::iota(parent.begin(), parent.end(), 0L);
  auto find = [&](long x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (long m = -r; m <= r; ++m) {
    for (long i = -r; i <= r; ++i) {
      if (!in_table_domain(w, m, i) || !M.defined(m, i) || M.a(m, i).is_zero()) continue;
      long x = find(i + r);
      long y = find(m + i + r);
      if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    }
  }
  std::map<long, std::vector<long>> groups;
  for (long i = -r; i <= r; ++i) groups[find(i + r)].push_back(i);
  IndecomposabilityResult out{w, groups.size() == 1, {}};
  for (auto& [_, members] : groups) out.components.push_back(std::move(members));
  return out;
}

}  // namespace gal
