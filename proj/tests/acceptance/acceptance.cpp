// Acceptance suite: one PASS/FAIL line per criterion. Every expected value is
// either a closed-form statement of the theory or recomputed here by code that
// does not share evaluation paths with the library.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gal/classification.hpp"
#include "gal/cli.hpp"
#include "gal/errors.hpp"
#include "gal/expr_parser.hpp"
#include "gal/intertwiner.hpp"
#include "gal/laws.hpp"
#include "gal/structure_solver.hpp"
#include "gal/virasoro.hpp"
#include "gal/weight_module.hpp"
#include "test_support.hpp"

using namespace gal;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string str(const Rational& r) { return r.str(); }

// ---------------------------------------------------------------------------
// Oracle algebra: elements are finite sums of W_k, products expand bilinearly.

using Phi = std::function<Rational(long, long)>;
using Elem = std::map<long, Rational>;

struct OutOfRange {};

struct Algebra {
  Phi phi;
  long radius;  // lookups outside |k| <= radius abort the instance
  bool bounded;

  Rational at(long a, long b) const {
    if (bounded && (std::labs(a) > radius || std::labs(b) > radius || std::labs(a + b) > radius)) throw OutOfRange{};
    return phi(a, b);
  }
  Elem mul(const Elem& x, const Elem& y) const {
    Elem out;
    for (const auto& [a, ca] : x) {
      for (const auto& [b, cb] : y) out[a + b] += ca * cb * at(a, b);
    }
    return prune(out);
  }
  static Elem prune(Elem e) {
    for (auto it = e.begin(); it != e.end();) it = it->second.is_zero() ? e.erase(it) : std::next(it);
    return e;
  }
};

Elem basis(long k) { return {{k, Rational(1)}}; }
Elem add(Elem a, const Elem& b, const Rational& s = Rational(1)) {
  for (const auto& [k, v] : b) a[k] += s * v;
  return Algebra::prune(a);
}
Elem witt(long m, long n) { return Algebra::prune({{m + n, Rational(n - m)}}); }

enum class OracleLaw { Commutator, AntiPreLie, AdmissibleNovikov, Novikov };

/// Counts failing instances of the law over basis triples of the window.
/// Instances touching indices outside a bounded algebra are skipped.
std::size_t oracle_failures(const Algebra& A, OracleLaw law, long r, std::size_t* checked = nullptr) {
  std::size_t bad = 0, seen = 0;
  auto comm = [&](const Elem& x, const Elem& y) { return add(A.mul(x, y), A.mul(y, x), Rational(-1)); };
  for (long m = -r; m <= r; ++m) {
    for (long n = -r; n <= r; ++n) {
      if (law == OracleLaw::Commutator || law == OracleLaw::AntiPreLie) {
        try {
          // x o y - y o x = [x, y] in the Witt algebra
          Elem d = add(comm(basis(m), basis(n)), witt(m, n), Rational(-1));
          ++seen;
          if (!d.empty()) ++bad;
        } catch (OutOfRange) {
        }
      }
      if (law == OracleLaw::Commutator) continue;
      for (long l = -r; l <= r; ++l) {
        const Elem x = basis(m), y = basis(n), z = basis(l);
        try {
          Elem d;
          std::vector<Elem> extra;
          switch (law) {
            case OracleLaw::AntiPreLie:
              // x o (y o z) - y o (x o z) = [y, x] o z
              d = add(add(A.mul(x, A.mul(y, z)), A.mul(y, A.mul(x, z)), Rational(-1)), A.mul(witt(n, m), z),
                      Rational(-1));
              break;
            case OracleLaw::AdmissibleNovikov:
              // x o (y o z) - y o (x o z) = [y, x]_o o z  and  (x o y) o z - (x o z) o y = 2 x o [y, z]_o
              d = add(add(A.mul(x, A.mul(y, z)), A.mul(y, A.mul(x, z)), Rational(-1)), A.mul(comm(y, x), z),
                      Rational(-1));
              extra.push_back(add(add(A.mul(A.mul(x, y), z), A.mul(A.mul(x, z), y), Rational(-1)),
                                  A.mul(x, comm(y, z)), Rational(-2)));
              break;
            case OracleLaw::Novikov:
              // (x o y) o z - x o (y o z) symmetric in x, y  and  (x o y) o z = (x o z) o y
              d = add(add(A.mul(A.mul(x, y), z), A.mul(x, A.mul(y, z)), Rational(-1)),
                      add(A.mul(A.mul(y, x), z), A.mul(y, A.mul(x, z)), Rational(-1)), Rational(-1));
              extra.push_back(add(A.mul(A.mul(x, y), z), A.mul(A.mul(x, z), y), Rational(-1)));
              break;
            case OracleLaw::Commutator:
              break;
          }
          ++seen;
          bool fail = !d.empty();
          for (const auto& e : extra) fail = fail || !e.empty();
          if (fail) ++bad;
        } catch (OutOfRange) {
        }
      }
    }
  }
  if (checked) *checked = seen;
  return bad;
}

/// phi(a,b) of the classified family: W_a o W_b = -(gamma + b + 2a) W_{a+b}.
Phi family_phi(const Rational& g) {
  return [g](long a, long b) { return -(g + Rational(b) + Rational(2 * a)); };
}

std::vector<std::pair<long, long>> domain_pairs(long r) {
  std::vector<std::pair<long, long>> out;
  for (long a = -r; a <= r; ++a) {
    for (long b = -r; b <= r; ++b) {
      if (std::labs(a + b) <= r) out.emplace_back(a, b);
    }
  }
  return out;
}

bool table_matches(const StructureTable& t, const Phi& phi) {
  for (auto [a, b] : domain_pairs(t.window().radius)) {
    if (t.at(a, b) != phi(a, b)) return false;
  }
  return true;
}

// Module oracles: W_m v_i = a(m,i) v_{m+i}.
using Action = std::function<Rational(long, long)>;

Action valpha_action(const Rational& alpha) {
  return [alpha](long m, long i) { return i != 0 ? Rational(m + i) : Rational(m) * (alpha + Rational(m)); };
}
Action vbeta_action(const Rational& beta) {
  return [beta](long m, long i) { return m + i != 0 ? Rational(i) : -Rational(m) * (beta + Rational(m)); };
}
Action valphabeta_action(const Rational& alpha, const Rational& beta) {
  return [alpha, beta](long m, long i) { return alpha + Rational(i) + Rational(m) * beta; };
}
/// rho(W_m) W_n = -W_m o W_n.
Action structure_action(const Rational& g) {
  auto phi = family_phi(g);
  return [phi](long m, long n) { return -phi(m, n); };
}

/// rho(W_m) rho(W_n) - rho(W_n) rho(W_m) - rho([W_m, W_n]) on v_i, for all
/// m, n, i with every index in the window.
std::size_t module_failures(const Action& a, long r) {
  std::size_t bad = 0;
  for (long m = -r; m <= r; ++m) {
    for (long n = -r; n <= r; ++n) {
      for (long i = -r; i <= r; ++i) {
        if (std::labs(m + i) > r || std::labs(n + i) > r || std::labs(m + n) > r || std::labs(m + n + i) > r) continue;
        Rational lhs = a(n, i) * a(m, n + i) - a(m, i) * a(n, m + i);
        if (lhs != Rational(n - m) * a(m + n, i)) ++bad;
      }
    }
  }
  return bad;
}

/// Components of the undirected action graph by breadth-first search.
std::vector<std::vector<long>> bfs_components(const Action& a, long r) {
  std::map<long, std::set<long>> adj;
  for (long m = -r; m <= r; ++m) {
    for (long i = -r; i <= r; ++i) {
      if (std::labs(m + i) > r || a(m, i).is_zero() || m == 0) continue;
      adj[i].insert(m + i);
      adj[m + i].insert(i);
    }
  }
  std::set<long> seen;
  std::vector<std::vector<long>> out;
  for (long s = -r; s <= r; ++s) {
    if (seen.count(s)) continue;
    std::vector<long> comp;
    std::queue<long> q;
    q.push(s);
    seen.insert(s);
    while (!q.empty()) {
      long x = q.front();
      q.pop();
      comp.push_back(x);
      for (long y : adj[x]) {
        if (seen.insert(y).second) q.push(y);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

/// Re-derives an intertwiner failure from the raw actions.
bool oracle_infeasible(const Action& A, const Action& B, long r, const IntertwinerInfeasible& f) {
  using Kind = IntertwinerInfeasible::Kind;
  if (f.kind == Kind::NoShift) {
    for (long k = -64 * r; k <= 64 * r; ++k) {
      if (B(0, k) == A(0, 0)) return false;
    }
    return true;
  }
  const long k = *f.k;
  if (f.kind == Kind::WeightMismatch) return A(0, f.i) != B(0, f.i + k);
  if (A(f.m, f.i) != f.lhs_coef || B(f.m, f.i + k) != f.rhs_coef) return false;
  if (f.kind == Kind::ForcedZero) return f.lhs_coef.is_zero() != f.rhs_coef.is_zero();
  // Inconsistent ratio: replay both chains from the root with value 1.
  auto replay = [&](const std::vector<PropagationStep>& chain, long target) -> std::optional<Rational> {
    std::map<long, Rational> c{{f.root, Rational(1)}};
    for (const auto& s : chain) {
      if (!c.count(s.from)) return std::nullopt;
      const Rational pa = A(s.m, s.i), pb = B(s.m, s.i + k);
      if (pa.is_zero() || pb.is_zero()) return std::nullopt;
      // a^A(m,i) c_{m+i} = c_i a^B(m,i+k)
      if (s.to == s.m + s.i && s.from == s.i) {
        c[s.to] = c[s.from] * pb / pa;
      } else if (s.to == s.i && s.from == s.m + s.i) {
        c[s.to] = c[s.from] * pa / pb;
      } else {
        return std::nullopt;
      }
    }
    if (!c.count(target)) return std::nullopt;
    return c[target];
  };
  auto ci = f.chain_i.empty() ? std::optional<Rational>(f.i == f.root ? Rational(1) : Rational(0))
                              : replay(f.chain_i, f.i);
  auto cmi = f.chain_mi.empty() ? std::optional<Rational>(f.m + f.i == f.root ? Rational(1) : Rational(0))
                                : replay(f.chain_mi, f.m + f.i);
  if (!ci || !cmi || ci->is_zero() || cmi->is_zero()) return false;
  return f.lhs_coef * *cmi != *ci * f.rhs_coef;
}

// Virasoro rows, written from the defining equations:
//   Vir-3:  psi_m - psi_{-m} = (m^3 - m)/12
//   Vir-4:  (g+m-n) psi_n - (g+n-m) psi_m = (m-n) psi_{m+n}
//   Vir-5:  (g+m) psi_0 = g psi_m
std::pair<std::map<long, Rational>, Rational> central_row(const Rational& g, const CertificateRow& row) {
  std::map<long, Rational> c;
  Rational k;
  const long m = row.m, n = row.n;
  if (row.eq == CentralEq::Vir3) {
    c[m] += Rational(1);
    c[-m] -= Rational(1);
    k = -Rational(m * m * m - m, 12);
  } else if (row.eq == CentralEq::Vir4) {
    c[n] += g + Rational(m - n);
    c[m] -= g + Rational(n - m);
    c[m + n] -= Rational(m - n);
  } else {
    c[0] += g + Rational(m);
    c[m] -= g;
  }
  return {c, k};
}

bool oracle_certificate(const Rational& g, long r, const InfeasibilityCertificate& cert) {
  std::map<long, Rational> total;
  Rational k;
  for (const auto& row : cert.rows) {
    if (std::labs(row.m) > r || std::labs(row.n) > r || std::labs(row.m + row.n) > r) return false;
    auto [c, k0] = central_row(g, row);
    for (const auto& [i, v] : c) total[i] += row.coef * v;
    k += row.coef * k0;
  }
  for (const auto& [i, v] : total) {
    if (!v.is_zero()) return false;
  }
  return !k.is_zero() && k == cert.contradiction;
}

// ---------------------------------------------------------------------------

std::string ac1() {
  const std::vector<Rational> gammas = {Rational(0), Rational(1), Rational(-2), Rational(7, 3), Rational(5, 2)};
  auto t0 = std::chrono::steady_clock::now();
  std::size_t window_checks = 0;
  for (const auto& g : gammas) {
    auto s = family_structure(g);
    for (Law law : {Law::WittCommutator, Law::AntiPreLie, Law::AdmissibleNovikov}) {
      auto sym = check_law_symbolic(law, s);
      expect(sym.pass(), law_name(law) + " symbolic residual nonzero for gamma=" + str(g));
      auto win = check_law(law, s, Window(12));
      expect(win.pass() && win.checked > 0, law_name(law) + " fails on N=12 for gamma=" + str(g));
      window_checks += win.checked;
    }
  }
  // Formal gamma as well.
  for (Law law : {Law::WittCommutator, Law::AntiPreLie, Law::AdmissibleNovikov}) {
    expect(check_law_symbolic(law, family_structure()).pass(), law_name(law) + " fails with formal gamma");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  expect(secs < 5.0, "library checks took " + std::to_string(secs) + " s");
  // Oracle: operator identities over every basis triple of N=12 with the closed form.
  std::size_t oracle_checked = 0;
  for (const auto& g : gammas) {
    Algebra A{family_phi(g), 12, false};
    for (auto law : {OracleLaw::Commutator, OracleLaw::AntiPreLie, OracleLaw::AdmissibleNovikov}) {
      std::size_t n = 0;
      expect(oracle_failures(A, law, 12, &n) == 0, "oracle identity fails for gamma=" + str(g));
      oracle_checked += n;
    }
  }
  std::ostringstream os;
  os << "5 gammas x 3 laws symbolic + N=12 (" << window_checks << " instances, " << static_cast<int>(secs * 1000)
     << " ms); oracle " << oracle_checked << " triples";
  return os.str();
}

std::string ac2() {
  const std::vector<Rational> pins = {Rational(0), Rational(-1), Rational(3), Rational(1, 2)};
  std::ostringstream os;
  for (const auto& pin : pins) {
    AnsatzProblem p;
    p.max_total_degree = 2;
    p.pin = pin;
    auto a = solve_ansatz(p);
    expect(a.status == SolveStatus::Complete, "ansatz incomplete for pin " + str(pin));
    expect(a.solutions.size() == 1, "ansatz returned " + std::to_string(a.solutions.size()) + " solutions");
    auto t = solve_table(Window(4), pin);
    expect(t.status == SolveStatus::Complete, "table search incomplete for pin " + str(pin));
    expect(t.solutions.size() == 1, "table search returned " + std::to_string(t.solutions.size()) + " solutions");
    const Phi expected = family_phi(-pin);
    expect(table_matches(t.solutions[0].table_data(), expected), "table differs from family for pin " + str(pin));
    const auto& poly = a.solutions[0].phi;
    for (auto [x, y] : domain_pairs(4)) {
      Rational v = poly.eval({{kLeftVar, Rational(x)}, {kRightVar, Rational(y)}});
      expect(v == expected(x, y), "ansatz differs from family at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
    expect(a.solutions[0].structure().materialize(Window(4)) == t.solutions[0].table_data(), "solvers disagree");
    os << "pin " << str(pin) << ": 1=1 (" << t.log.nodes << " nodes); ";
  }
  return os.str() + "ansatz D=2 == table N=4 == family(-pin)";
}

std::string ac3() {
  const std::vector<Rational> grid = {Rational(0), Rational(1),    Rational(-1),   Rational(2),
                                      Rational(-2), Rational(3, 2), Rational(-3, 2)};
  std::size_t pairs = 0;
  for (const auto& g1 : grid) {
    for (const auto& g2 : grid) {
      auto r = are_isomorphic(family_structure(g1), family_structure(g2), Window(8));
      const bool expected = g1 == g2 || g1 == -g2;
      expect(r.isomorphic == expected, "iso(" + str(g1) + "," + str(g2) + ") wrong");
      if (r.isomorphic) expect(r.epsilon == 1 || r.epsilon == -1, "missing epsilon");
      if (expected && g1 != g2) expect(r.epsilon == -1, "epsilon should be -1 for gamma and -gamma");
      ++pairs;
    }
  }
  std::size_t transforms = 0;
  for (const auto& g : grid) {
    for (const Rational& lambda : {Rational(1), Rational(2), Rational(-5, 3)}) {
      auto t = transform_structure(family_structure(g), -1, lambda, Window(8));
      // Transport along W_m -> -lambda^m W_{-m}: phi'(a,b) = -phi(-a,-b).
      const Phi fam = family_phi(g);
      expect(table_matches(t.table_data(), [&](long a, long b) { return -fam(-a, -b); }), "transport formula");
      expect(table_matches(t.table_data(), family_phi(-g)), "transform does not give family(-gamma)");
      ++transforms;
    }
  }
  return std::to_string(pairs) + " iso pairs (yes iff g1 = +-g2), " + std::to_string(transforms) +
         " eps=-1 transforms to family(-gamma)";
}

std::string ac4() {
  const long r = 10;
  Window w(r);
  auto t0 = std::chrono::steady_clock::now();
  struct Item {
    std::string name;
    WeightModule M;
    Action oracle;
  };
  std::vector<Item> items;
  for (Rational a : {Rational(0), Rational(1), Rational(1, 2)}) {
    items.push_back({"V_" + str(a), WeightModule::valpha(a), valpha_action(a)});
  }
  for (Rational b : {Rational(0), Rational(2), Rational(-1)}) {
    items.push_back({"V^" + str(b), WeightModule::vbeta(b), vbeta_action(b)});
  }
  for (Rational a : {Rational(0), Rational(1, 2)}) {
    for (Rational b : {Rational(-1), Rational(0), Rational(1), Rational(2), Rational(3)}) {
      items.push_back({"V_" + str(a) + "," + str(b), WeightModule::valphabeta(a, b), valphabeta_action(a, b)});
    }
  }
  for (Rational g : {Rational(0), Rational(1, 2), Rational(3)}) {
    items.push_back({"S(" + str(g) + ")", WeightModule::from_structure(family_structure(g), w), structure_action(g)});
  }
  std::size_t checked = 0;
  for (const auto& it : items) {
    auto rep = check_module_axiom(it.M, w);
    expect(rep.pass() && rep.checked > 0, it.name + " fails the module axiom");
    checked += rep.checked;
    for (long m = -r; m <= r; ++m) {
      for (long i = -r; i <= r; ++i) {
        if (std::labs(m + i) <= r) expect(it.M.a(m, i) == it.oracle(m, i), it.name + " coefficient differs");
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& it : items) expect(module_failures(it.oracle, r) == 0, it.name + " oracle axiom fails");
  for (Rational g : {Rational(0), Rational(1, 2), Rational(3)}) {
    auto M = WeightModule::from_structure(family_structure(g), w);
    const Rational phi00 = family_phi(g)(0, 0);
    for (long n = -r; n <= r; ++n) expect(M.weight(n) == Rational(n) - phi00, "weight of W_n is not n - phi(0,0)");
    expect(M.weight_polynomial() && *M.weight_polynomial() == parse_expression("i") - MultiPoly(phi00),
           "weight polynomial");
  }
  expect(secs < 5.0, "module checks took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << items.size() << " modules on N=10 (" << checked << " instances, " << static_cast<int>(secs * 1000)
     << " ms); weights n - phi(0,0)";
  return os.str();
}

std::string ac5() {
  const long r = 6;
  Window w(r);
  std::size_t n = 0;
  auto indecomposable = [&](const WeightModule& M, const Action& a, const std::string& name) {
    auto res = check_indecomposable(M, w);
    expect(res.indecomposable, name + " reported decomposable");
    expect(res.components == bfs_components(a, r), name + " components differ from oracle");
    ++n;
  };
  for (Rational g : {Rational(0), Rational(1, 2), Rational(3)}) {
    indecomposable(WeightModule::from_structure(family_structure(g), w), structure_action(g), "S(" + str(g) + ")");
  }
  indecomposable(WeightModule::valphabeta(Rational(1, 2), Rational(0)), valphabeta_action(Rational(1, 2), Rational(0)),
                 "V_1/2,0");
  // W_m v_i = i v_{m+i} for m+i != 0 and 0 otherwise: span(v_0) is a direct summand.
  Action split = [](long m, long i) { return m + i != 0 ? Rational(i) : Rational(0); };
  auto M = WeightModule::custom("split", split);
  expect(check_module_axiom(M, w).pass(), "counterexample is not a module");
  expect(module_failures(split, r) == 0, "counterexample fails the oracle axiom");
  auto res = check_indecomposable(M, w);
  expect(!res.indecomposable, "counterexample reported indecomposable");
  expect(res.components == bfs_components(split, r), "counterexample components differ from oracle");
  std::vector<long> nonzero;
  for (long i = -r; i <= r; ++i) {
    if (i != 0) nonzero.push_back(i);
  }
  const std::vector<std::vector<long>> expected = {nonzero, {0}};
  expect(res.components == expected, "counterexample split is not {nonzero} + {0}");
  return std::to_string(n) + " indecomposable on N=6; counterexample splits into " +
         std::to_string(res.components.size()) + " components";
}

std::string ac6() {
  const long r = 8;
  Window w(r);
  auto A = WeightModule::from_structure(family_structure(Rational(5, 2)), w);
  auto B = WeightModule::valphabeta(Rational(1, 2), Rational(2));
  auto found = find_intertwiner(A, B, w);
  expect(found.found(), "no intertwiner into V_1/2,2");
  expect(found.k && *found.k == 2, "shift is not 2");
  for (long i = -r; i <= r; ++i) {
    expect(found.coefficients.count(i) && found.coefficients.at(i) == Rational(1), "c_i != 1");
  }
  expect(verify_intertwiner(A, B, w, 2, found.coefficients), "witness does not verify");
  // Oracle: a^A(m,i) c_{m+i} = c_i a^B(m,i+k) wherever every index stays in the window.
  const Action fa = structure_action(Rational(5, 2)), fb = valphabeta_action(Rational(1, 2), Rational(2));
  for (long m = -r; m <= r; ++m) {
    for (long i = -r; i <= r; ++i) {
      if (std::labs(m + i) > r || std::labs(i + 2) > r || std::labs(m + i + 2) > r) continue;
      expect(fa(m, i) == fb(m, i + 2), "oracle intertwining equation fails");
    }
  }

  struct Target {
    std::string name;
    WeightModule M;
    Action oracle;
  };
  std::vector<std::pair<Rational, Target>> cases;
  // Integer gamma makes the weights of S(gamma) integral, like those of V_alpha and V^beta.
  for (Rational g : {Rational(0), Rational(1), Rational(3)}) {
    for (Rational a : {Rational(0), Rational(1), Rational(1, 2)}) {
      cases.push_back({g, {"V_" + str(a), WeightModule::valpha(a), valpha_action(a)}});
    }
    for (Rational b : {Rational(0), Rational(2)}) {
      cases.push_back({g, {"V^" + str(b), WeightModule::vbeta(b), vbeta_action(b)}});
    }
  }
  for (Rational b : {Rational(-1), Rational(0), Rational(1), Rational(3)}) {
    cases.push_back({Rational(5, 2),
                     {"V_1/2," + str(b), WeightModule::valphabeta(Rational(1, 2), b), valphabeta_action(Rational(1, 2), b)}});
  }
  // Half-integer weights have nowhere to go in V_alpha.
  cases.push_back({Rational(5, 2), {"V_0", WeightModule::valpha(Rational(0)), valpha_action(Rational(0))}});

  std::map<std::string, int> kinds;
  for (const auto& [g, target] : cases) {
    auto src = WeightModule::from_structure(family_structure(g), w);
    auto res = find_intertwiner(src, target.M, w);
    const std::string label = "S(" + str(g) + ") -> " + target.name;
    expect(!res.found(), label + " unexpectedly isomorphic");
    expect(verify_infeasible(src, target.M, w, *res.infeasible), label + " witness rejected by verifier");
    expect(oracle_infeasible(structure_action(g), target.oracle, r, *res.infeasible),
           label + " witness rejected by oracle");
    ++kinds[infeasible_kind_name(res.infeasible->kind)];
  }
  expect(kinds["no-shift"] >= 1, "no-shift case not exercised");
  std::ostringstream os;
  os << "S(5/2) -> V_1/2,2 at k=2 with c=1; " << cases.size() << " infeasible (";
  bool first = true;
  for (const auto& [k, v] : kinds) {
    os << (first ? "" : ", ") << k << " " << v;
    first = false;
  }
  os << ")";
  return os.str();
}

std::string ac7() {
  const long r = 4;
  Window w(r);
  std::vector<Rational> gammas = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(-3, 2)};
  for (int t = 0; t < 25; ++t) gammas.push_back(gal::testing::random_rational(50, 13));
  for (const auto& g : gammas) {
    auto out = solve_central(g, w);
    expect(!out.feasible && out.certificate, "gamma=" + str(g) + " reported feasible");
    expect(verify_certificate(g, w, *out.certificate), "certificate for gamma=" + str(g) + " rejected");
    expect(oracle_certificate(g, r, *out.certificate), "oracle rejects certificate for gamma=" + str(g));
  }
  // gamma = 0: psi_m = (m^3 - m)/24 satisfies Vir-3 but Vir-4 at (1,2) leaves 3/4.
  std::map<long, Rational> psi;
  for (long m = -r; m <= r; ++m) psi[m] = Rational(m * m * m - m, 24);
  auto [c12, k12] = central_row(Rational(0), {CentralEq::Vir4, 1, 2, Rational(1)});
  Rational residual = k12;
  for (const auto& [i, v] : c12) residual += v * psi[i];
  expect(residual == Rational(3, 4), "oracle Vir-4 residual at (1,2) is " + str(residual));
  auto rep = check_central({Rational(0), psi}, w);
  bool found = false;
  for (const auto& v : rep.violations) {
    expect(v.clause != "Vir-3", "Vir-3 violated by (m^3-m)/24");
    if (v.clause == "Vir-4" && v.index("m") == 1 && v.index("n") == 2) found = v.residual == Rational(3, 4);
  }
  expect(found, "check_central does not report 3/4 at (1,2)");
  expect(solve_central(Rational(0), w).certificate->contradiction == Rational(3, 4), "gamma=0 contradiction");
  return std::to_string(gammas.size()) + " gammas infeasible on N=4, certificates verified twice; Vir-4(1,2) = 3/4";
}

std::string ac8() {
  std::size_t round_trips = 0;
  for (Rational xi : {Rational(0), Rational(1), Rational(-2)}) {
    // W_n o W_m = (xi + m) W_{m+n}
    auto s = GradedStructure::symbolic(parse_expression("xi + " + kRightVar, {"xi"}), {{"xi", xi}});
    expect(check_law_symbolic(Law::Novikov, s).pass(), "novikov symbolic fails for xi=" + str(xi));
    expect(check_law(Law::Novikov, s, Window(8)).pass(), "novikov N=8 fails for xi=" + str(xi));
    Algebra A{[xi](long, long b) { return xi + Rational(b); }, 8, false};
    expect(oracle_failures(A, OracleLaw::Novikov, 8) == 0, "oracle novikov fails for xi=" + str(xi));
  }
  const long r = 8;
  for (int t = 0; t < 20; ++t) {
    StructureTable table{Window(r)};
    for (auto [a, b] : domain_pairs(r)) table.set(a, b, gal::testing::random_rational());
    auto s = GradedStructure::table(table);
    auto nov = q_transform(s, QDirection::ToNovikov);
    auto adm = q_transform(s, QDirection::ToAdmissible);
    expect(q_transform(nov, QDirection::ToAdmissible).table_data() == table, "to_admissible o to_novikov != id");
    expect(q_transform(adm, QDirection::ToNovikov).table_data() == table, "to_novikov o to_admissible != id");
    // Oracle for the maps themselves.
    for (auto [a, b] : domain_pairs(r)) {
      const Rational& x = table.at(a, b);
      const Rational& y = table.at(b, a);
      expect(nov.table_data().at(a, b) == -Rational(1, 3) * (x - Rational(2) * y), "to_novikov entry");
      expect(adm.table_data().at(a, b) == x + Rational(2) * y, "to_admissible entry");
    }
    round_trips += 2;
  }
  auto fam = q_transform(family_structure(), QDirection::ToNovikov);
  expect(fam.is_symbolic(), "to_novikov(family) is not symbolic");
  expect(fam.expression() == parse_expression("-(1/3*g + m)", {"g"}), "to_novikov(family) != -(g/3 + m)");
  expect(check_law_symbolic(Law::Novikov, fam).pass(), "to_novikov(family) is not Novikov");
  Algebra A{[](long, long b) { return -(Rational(7, 3) / Rational(3) + Rational(b)); }, 6, false};
  expect(oracle_failures(A, OracleLaw::Novikov, 6) == 0, "oracle: -(g/3 + m) is not Novikov");
  return "xi in {0,1,-2} Novikov; " + std::to_string(round_trips) + " q round trips on N=8; to_novikov(family) = " +
         format_canonical(fam.expression());
}

std::string ac9() {
  const std::vector<std::string> vars = {"g", "i", "l", "m", "n", "xi"};
  for (int t = 0; t < 1000; ++t) {
    MultiPoly p = gal::testing::random_poly(vars, 6, 4);
    const std::string text = format_canonical(p);
    expect(parse_expression(text, {"g", "xi"}) == p, "round trip failed for " + text);
    expect(format_canonical(parse_expression(text, {"g", "xi"})) == text, "format not stable for " + text);
  }
  const std::vector<std::vector<std::string>> malformed = {
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "m +"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "m ++ n"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "(m + n"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "m + n)"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "m / n"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "1/0"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "m^"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "m^-1"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "m^1000"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "2 m"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "1.5*m"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "sin(m)"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "m + #"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", ""},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--phi", "m * * n"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--structure", "{\"kind\":\"table\",}"},
      {"check-law", "--law", "anti-pre-lie", "--window", "3", "--structure",
       "{\"kind\":\"symbolic\",\"expr\":\"n + (m\"}"},
      {"iso", "--left", "family:g=1/", "--right", "family", "--window", "3"},
      {"iso", "--left", "family:g=--1", "--right", "family", "--window", "3"},
      {"module-check", "--module", "valphabeta:alpha=1/2,beta=2x", "--window", "3"},
  };
  std::size_t n = 0;
  for (const auto& args : malformed) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    const std::string e = err.str();
    expect(code == 2, "exit " + std::to_string(code) + " for '" + args.back() + "'");
    expect(e.find("at offset ") != std::string::npos, "no position for '" + args.back() + "': " + e);
    ++n;
  }
  return "1000 random polynomials round-trip; " + std::to_string(n) + " malformed inputs exit 2 with a position";
}

}  // namespace

int main(int argc, char** argv) {
  gal::testing::consume_seed_flag(argc, argv);
  std::cout << "seed " << gal::testing::seed() << "\n";
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"AC1 family law suite", ac1},
      {"AC2 classification at desk scale", ac2},
      {"AC3 isomorphism classification", ac3},
      {"AC4 module suite", ac4},
      {"AC5 indecomposability", ac5},
      {"AC6 intertwiner dichotomy", ac6},
      {"AC7 Virasoro nonexistence", ac7},
      {"AC8 Novikov and q-transform chain", ac8},
      {"AC9 parser and format", ac9},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      detail = fn();
      ok = true;
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "PASS " : "FAIL ") << name << " [" << ms << " ms]: " << detail << "\n";
    failed += ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all 9 criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
