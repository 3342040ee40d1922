#include <algorithm>
#include <stdexcept>

#include "gal/errors.hpp"
#include "gal/expr_parser.hpp"
#include "gal/laws.hpp"
#include "gal/structure_solver.hpp"

namespace gal {

namespace {

using Relations = std::vector<std::pair<std::string, MultiPoly>>;

struct Node {
  std::vector<MultiPoly> eqs;
  Relations relations;
};

std::string coeff_name(unsigned p, unsigned q) { return "c" + std::to_string(p) + std::to_string(q); }

/// Scales so the leading coefficient is 1; equal equations then compare equal.
MultiPoly monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p * MultiPoly(p.terms().begin()->second.inverse());
}

bool canonical_less(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
  return format_canonical(a) < format_canonical(b);
}

void assign(Node& node, const std::string& var, const MultiPoly& value) {
  const std::map<std::string, MultiPoly> sub{{var, value}};
  for (auto& e : node.eqs) e = e.substitute(sub);
  for (auto& [_, rhs] : node.relations) rhs = rhs.substitute(sub);
  node.relations.emplace_back(var, value);
}

/// p / x^e, assuming every term of p carries x^e.
MultiPoly divide_by_power(const MultiPoly& p, const std::string& x, unsigned e) {
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const auto& [mono, c] : p.terms()) {
    Monomial rest = mono.without(x);
    unsigned left = mono.exponent(x) - e;
    terms.emplace_back(left > 0 ? rest * Monomial::variable(x, left) : rest, c);
  }
  return MultiPoly::from_terms(terms);
}

enum class Step { Progress, Solved, Dead, Branched, Stalled };

/// Applies forced eliminations until the node is solved, dead, or needs a
/// branch (children appended to `out`).
Step simplify(Node& node, std::vector<Node>& out) {
  while (true) {
    std::vector<MultiPoly> eqs;
    for (const auto& e : node.eqs) {
      if (e.is_zero()) continue;
      if (e.is_constant()) return Step::Dead;
      eqs.push_back(monic(e));
    }
    std::sort(eqs.begin(), eqs.end(), canonical_less);
    eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
    node.eqs = std::move(eqs);
    if (node.eqs.empty()) return Step::Solved;

    // Linear pivot with a constant coefficient.
    bool pivoted = false;
    for (const auto& e : node.eqs) {
      for (const auto& v : e.variables()) {
        auto cs = e.coefficients_in(v);
        if (cs.size() == 2 && cs[1].is_constant()) {
          MultiPoly value = -cs[0] * MultiPoly(cs[1].constant_term().inverse());
          assign(node, v, value);
          pivoted = true;
          break;
        }
      }
      if (pivoted) break;
    }
    if (pivoted) continue;

    // Univariate equation: branch on its rational roots.
    for (const auto& e : node.eqs) {
      auto vars = e.variables();
      if (vars.size() != 1) continue;
      const std::string v = *vars.begin();
      std::vector<Rational> coeffs;
      for (const auto& c : e.coefficients_in(v)) coeffs.push_back(c.constant_term());
      auto roots = rational_roots(coeffs);
      if (roots.empty()) return Step::Dead;
      for (const auto& r : roots) {
        Node child = node;
        assign(child, v, MultiPoly(r));
        out.push_back(std::move(child));
      }
      return Step::Branched;
    }

    // A variable dividing every term: x = 0 or the cofactor vanishes.
    for (std::size_t k = 0; k < node.eqs.size(); ++k) {
      const MultiPoly& e = node.eqs[k];
      for (const auto& v : e.variables()) {
        unsigned low = ~0u;
        for (const auto& [mono, _] : e.terms()) low = std::min(low, mono.exponent(v));
        if (low == 0) continue;
        Node zero = node;
        assign(zero, v, MultiPoly(0));
        Node cofactor = node;
        cofactor.eqs[k] = divide_by_power(e, v, low);
        out.push_back(std::move(zero));
        out.push_back(std::move(cofactor));
        return Step::Branched;
      }
    }
    return Step::Stalled;
  }
}

std::vector<std::string> describe(const Node& node) {
  std::vector<std::string> out;
  for (const auto& e : node.eqs) out.push_back(format_canonical(e) + " = 0");
  return out;
}

}  // namespace

std::string solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Complete: return "complete";
    case SolveStatus::BudgetExceeded: return "budget-exceeded";
    case SolveStatus::Stalled: return "stalled";
  }
  return "";
}

GradedStructure AnsatzSolution::structure() const { return GradedStructure::symbolic(phi); }

AnsatzOutcome solve_ansatz(const AnsatzProblem& p) {
  const unsigned D = p.max_total_degree;
  if (D == 0) throw InvalidArgument("ansatz degree must be at least 1 (degree 0 cannot satisfy linear-1)");
  if (D > 9) throw InvalidArgument("ansatz degree is limited to 9");

  const MultiPoly n = MultiPoly::variable(kLeftVar);
  const MultiPoly m = MultiPoly::variable(kRightVar);
  const MultiPoly l = MultiPoly::variable("l");
  const std::set<std::string> index_vars{kLeftVar, kRightVar, "l"};

  MultiPoly phi;
  for (unsigned a = 0; a <= D; ++a) {
    for (unsigned b = 0; a + b <= D; ++b) {
      phi += MultiPoly::variable(coeff_name(a, b)) * pow(n, a) * pow(m, b);
    }
  }
  auto at = [](const MultiPoly& f, const MultiPoly& left, const MultiPoly& right) {
    return f.substitute({{kLeftVar, left}, {kRightVar, right}});
  };

  AnsatzOutcome outcome;

  // linear-1 is linear in the coefficients: eliminate it first.
  Node lin;
  for (const auto& [_, c] : (at(phi, n, m) - at(phi, m, n) - (m - n)).collect(index_vars)) lin.eqs.push_back(c);
  std::vector<Node> scratch;
  Step s = simplify(lin, scratch);
  if (s == Step::Dead) return outcome;
  if (s != Step::Solved) throw std::logic_error("linear-1 elimination did not close");
  std::map<std::string, MultiPoly> sub(lin.relations.begin(), lin.relations.end());
  const MultiPoly phi1 = phi.substitute(sub);

  Node root;
  root.relations = lin.relations;
  MultiPoly r2 = (n - m) * at(phi1, m + n, l) - at(phi1, m, l) * at(phi1, n, m + l) + at(phi1, n, l) * at(phi1, m, n + l);
  for (const auto& [_, c] : r2.collect(index_vars)) root.eqs.push_back(c);
  if (p.pin) root.eqs.push_back(at(phi1, MultiPoly(0), MultiPoly(0)) - MultiPoly(*p.pin));

  std::vector<Node> stack{std::move(root)};
  while (!stack.empty()) {
    if (outcome.log.nodes >= p.budget) {
      outcome.status = SolveStatus::BudgetExceeded;
      for (const auto& node : stack) outcome.frontier.push_back(describe(node));
      break;
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    ++outcome.log.nodes;
    std::vector<Node> children;
    switch (simplify(node, children)) {
      case Step::Dead:
        ++outcome.log.pruned;
        break;
      case Step::Stalled:
        ++outcome.log.stalled;
        outcome.frontier.push_back(describe(node));
        if (outcome.status == SolveStatus::Complete) outcome.status = SolveStatus::Stalled;
        break;
      case Step::Branched:
        for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
        break;
      case Step::Solved: {
        std::map<std::string, MultiPoly> all(node.relations.begin(), node.relations.end());
        AnsatzSolution sol;
        sol.phi = phi.substitute(all);
        sol.relations = node.relations;
        for (const auto& v : sol.phi.variables()) {
          if (!index_vars.count(v)) sol.free_parameters.push_back(v);
        }
        bool duplicate = std::any_of(outcome.solutions.begin(), outcome.solutions.end(),
                                     [&](const AnsatzSolution& o) { return o.phi == sol.phi; });
        if (duplicate) {
          ++outcome.log.duplicates;
          break;
        }
        if (!check_law_symbolic(Law::AntiPreLie, sol.structure()).pass()) {
          throw std::logic_error("ansatz solution failed the independent anti-pre-Lie check: " +
                                 format_canonical(sol.phi));
        }
        outcome.solutions.push_back(std::move(sol));
        break;
      }
      case Step::Progress:
        break;
    }
  }
  std::sort(outcome.solutions.begin(), outcome.solutions.end(),
            [](const AnsatzSolution& a, const AnsatzSolution& b) { return canonical_less(a.phi, b.phi); });
  return outcome;
}

}  // namespace gal
