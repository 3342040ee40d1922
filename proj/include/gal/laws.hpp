#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gal/graded_structure.hpp"

namespace gal {

enum class Law {
  WittCommutator,
  Jacobi,
  AntiPreLie,
  PreLie,
  RightCommutative,
  Novikov,
  AdmissibleNovikov,
  ModuleAxiom,
  VirasoroCentral,
};

std::string law_name(Law law);
std::optional<Law> parse_law(std::string_view name);

/// One failing equation instance. `indices` are named after the variables
/// of the clause's formula, in formula order.
struct Violation {
  std::string clause;
  std::vector<std::pair<std::string, long>> indices;
  Rational residual;

  long index(const std::string& name) const;
};

struct SymbolicResidual {
  std::string clause;
  MultiPoly residual;
};

struct LawReport {
  Law law = Law::AntiPreLie;
  std::optional<Window> window;
  std::size_t checked = 0;
  /// Instances dropped because some index (or index sum) left the window.
  std::size_t skipped = 0;
  std::vector<Violation> violations;
  std::optional<std::vector<SymbolicResidual>> symbolic_residuals;

  /// Violations empty and every symbolic residual is the zero polynomial.
  bool pass() const;
  /// Absorbs the counts, violations and residuals of another report.
  void absorb(LawReport other);
};

// Window checks. The structure is materialized on `w`; every clause instance
// whose indices (including sums) all lie in `w` is evaluated exactly.
//
// Residual formulas, with phi(a,b) the coefficient of W_a o W_b:
//   linear-1           phi(m,n) - phi(n,m) - (n - m)
//   linear-2           (n-m) phi(m+n,l) - phi(m,l) phi(n,m+l) + phi(n,l) phi(m,n+l)
//   anti-1             phi(n,l) phi(m,n+l) - phi(m,l) phi(n,m+l) - (phi(n,m) - phi(m,n)) phi(m+n,l)
//   pre-lie            A(m,n,l) - A(n,m,l),  A(m,n,l) = phi(m,n) phi(m+n,l) - phi(n,l) phi(m,n+l)
//   right-commutative  phi(m,n) phi(m+n,l) - phi(m,l) phi(m+l,n)
//   admissible         phi(n,m) phi(n+m,l) - phi(n,l) phi(n+l,m) - 2 phi(n,m+l) (phi(m,l) - phi(l,m))
//   jacobi             b(m,n) b(m+n,l) + b(n,l) b(n+l,m) + b(l,m) b(l+m,n)
//
// Laws: witt-commutator = linear-1; anti-pre-lie = linear-1 + linear-2;
// novikov = pre-lie + right-commutative; admissible-novikov = anti-1 + admissible.
LawReport check_witt_commutator(const GradedStructure& s, const Window& w);
LawReport check_anti_pre_lie(const GradedStructure& s, const Window& w);
LawReport check_pre_lie(const GradedStructure& s, const Window& w);
LawReport check_right_commutative(const GradedStructure& s, const Window& w);
LawReport check_novikov(const GradedStructure& s, const Window& w);
LawReport check_admissible_novikov(const GradedStructure& s, const Window& w);

/// Jacobi identity for bracket constants [W_a, W_b] = b(a,b) W_{a+b}.
/// Throws InvalidArgument if `bracket` is not antisymmetric.
LawReport check_jacobi(const GradedStructure& bracket, const Window& w);

LawReport check_law(Law law, const GradedStructure& s, const Window& w);

/// Symbolic check: every clause residual expanded as a polynomial in the
/// index variables (and any formal parameters). Requires a symbolic structure.
LawReport check_law_symbolic(Law law, const GradedStructure& s);

/// Commutator constants b(a,b) = phi(a,b) - phi(b,a), same kind as `s`.
GradedStructure bracket_of(const GradedStructure& s);

}  // namespace gal
