#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gal/rational.hpp"

namespace gal {

using Bindings = std::map<std::string, Rational>;

/// Power product of named variables. Factors are kept sorted by name with
/// strictly positive exponents, so equal monomials compare equal structurally.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(const std::string& name, unsigned exponent = 1);

  unsigned degree() const;
  unsigned exponent(const std::string& name) const;
  bool is_one() const { return factors_.empty(); }
  const std::vector<std::pair<std::string, unsigned>>& factors() const { return factors_; }

  /// This monomial with `name` removed.
  Monomial without(const std::string& name) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<std::string, unsigned>> factors_;
};

/// Graded lexicographic order, descending: higher total degree first; ties
/// broken by exponent of the alphabetically first variable, then the next.
/// This is the fixed order used for canonical storage and printing.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with exact rational coefficients. The term map
/// never stores zero coefficients, so `==` is mathematical equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT: constants promote implicitly
  MultiPoly(long long constant) : MultiPoly(Rational(constant)) {}  // NOLINT
  static MultiPoly variable(const std::string& name);
  static MultiPoly term(const Rational& coefficient, const Monomial& monomial);

  /// Combines like terms and drops zeros; the canonicalizing constructor.
  static MultiPoly from_terms(const std::vector<std::pair<Monomial, Rational>>& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  unsigned total_degree() const;
  unsigned degree_in(const std::string& name) const;
  std::set<std::string> variables() const;

  /// Exact value; throws UnboundVariable naming the first missing variable.
  Rational eval(const Bindings& bindings) const;

  /// Substitutes the bound variables only; others stay formal.
  MultiPoly bind(const Bindings& bindings) const;

  /// Simultaneous substitution of variables by polynomials.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& replacement) const;

  /// Coefficients with respect to `vars`: maps each monomial in `vars` to the
  /// polynomial (in the remaining variables) multiplying it.
  std::map<Monomial, MultiPoly, GrlexDescending> collect(const std::set<std::string>& vars) const;

  /// Coefficients of a polynomial viewed as univariate in `name`, index = power.
  std::vector<MultiPoly> coefficients_in(const std::string& name) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

/// p^e for e >= 0; throws InvalidArgument for negative exponents.
MultiPoly pow(const MultiPoly& p, long long exponent);

/// All rational roots (distinct, ascending) of the univariate polynomial
/// with coefficients `coeffs[k]` for x^k. The zero polynomial is rejected.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

}  // namespace gal
