#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gal/graded_structure.hpp"
#include "gal/laws.hpp"

namespace gal {

/// Module with basis v_i (i in Z) and action W_m v_i = a(m,i) v_{m+i}.
/// Every weight space is spanned by one basis vector; the weight of v_i is a(0,i).
class WeightModule {
 public:
  enum class Kind { VAlpha, VBeta, VAlphaBeta, FromStructure, Custom };

  /// a(m,i) = m + i for i != 0, a(m,0) = m(alpha + m).
  static WeightModule valpha(Rational alpha);
  /// a(m,i) = i for m + i != 0, a(m,-m) = -m(beta + m).
  static WeightModule vbeta(Rational beta);
  /// a(m,i) = alpha + i + m beta.
  static WeightModule valphabeta(Rational alpha, Rational beta);
  /// Basis u_n = W_n with a(m,n) = -phi(m,n). Weights are checked to be
  /// pairwise distinct on `check` (defaults to the table window for tables;
  /// symbolic structures without `check` are not checked).
  static WeightModule from_structure(GradedStructure s, std::optional<Window> check = std::nullopt);
  /// Coefficients given as a polynomial in m (acting index) and i (basis
  /// index). No distinct-weight requirement.
  static WeightModule from_expression(MultiPoly expr, Bindings bindings = {}, std::optional<int> radius = std::nullopt);
  /// Arbitrary coefficient function, defined on pairs (m,i) with m, i, m+i
  /// inside `radius` when given, everywhere otherwise.
  static WeightModule custom(std::string label, std::function<Rational(long, long)> a,
                             std::optional<int> radius = std::nullopt);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  const std::optional<Rational>& alpha() const { return alpha_; }
  const std::optional<Rational>& beta() const { return beta_; }
  const GradedStructure& structure() const;
  const std::optional<MultiPoly>& expression() const { return expr_; }
  const Bindings& bindings() const { return bindings_; }
  /// Largest window on which the coefficients exist (unbounded when empty).
  std::optional<int> radius() const { return radius_; }

  bool defined(long m, long i) const;
  /// Throws OutOfWindow when (m,i) is not defined.
  Rational a(long m, long i) const;
  Rational weight(long i) const { return a(0, i); }

  /// Weight of v_i as a polynomial in the variable "i", when available.
  std::optional<MultiPoly> weight_polynomial() const;

  /// Throws InvalidArgument naming two indices of `w` with equal weights.
  void require_distinct_weights(const Window& w) const;

 private:
  WeightModule() = default;

  Kind kind_ = Kind::Custom;
  std::string label_;
  std::optional<Rational> alpha_;
  std::optional<Rational> beta_;
  std::shared_ptr<const GradedStructure> structure_;
  std::optional<MultiPoly> expr_;
  Bindings bindings_;
  std::optional<int> radius_;
  std::function<Rational(long, long)> coeff_;
};

/// Residual a(n,i) a(m,n+i) - a(m,i) a(n,m+i) - (n-m) a(m+n,i) for every
/// (m,n,i) whose coefficient lookups all stay in `w`. Law is module-axiom.
LawReport check_module_axiom(const WeightModule& M, const Window& w);

struct IndecomposabilityResult {
  Window window;
  bool indecomposable = false;
  /// Connected components of the index graph, each sorted ascending,
  /// ordered by their smallest index.
  std::vector<std::vector<long>> components;
};

/// Connectivity of the graph on the indices of `w` with an edge {i, m+i}
/// whenever a(m,i) != 0 and m, i, m+i all lie in `w`.
IndecomposabilityResult check_indecomposable(const WeightModule& M, const Window& w);

}  // namespace gal
