#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gal/multipoly.hpp"
#include "gal/rational.hpp"

namespace gal {

/// Symmetric index range {-radius, ..., radius}.
struct Window {
  int radius = 1;

  explicit Window(int r);
  bool contains(long k) const { return k >= -radius && k <= radius; }
  int size() const { return 2 * radius + 1; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Indices ordered 0, 1, -1, 2, -2, ..., radius, -radius.
std::vector<int> outward_order(const Window& w);

/// Variable naming in structure expressions. The expression gives the
/// coefficient of W_n o W_m, i.e. `n` is the left factor's index and `m`
/// the right factor's: "-(g + m + 2*n)" is W_n o W_m = -(g + m + 2n) W_{m+n}.
inline const std::string kLeftVar = "n";
inline const std::string kRightVar = "m";

/// A pair (a, b) belongs to a table on `w` iff a, b and a + b are in `w`,
/// i.e. W_a o W_b = phi(a,b) W_{a+b} stays inside the truncated basis.
bool in_table_domain(const Window& w, long a, long b);

/// Dense storage for phi on the table domain of a window.
class StructureTable {
 public:
  explicit StructureTable(Window w);

  const Window& window() const { return window_; }
  bool contains(long a, long b) const { return in_table_domain(window_, a, b); }
  bool has(long a, long b) const;
  /// Throws OutOfWindow outside the domain and InvalidArgument when unset.
  const Rational& at(long a, long b) const;
  /// nullptr outside the domain or when unset.
  const Rational* find(long a, long b) const;
  void set(long a, long b, Rational value);
  bool complete() const;

  /// Domain pairs (left, right) in row-major order.
  std::vector<std::pair<int, int>> domain() const;

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  std::size_t slot(long a, long b) const;
  Window window_;
  std::vector<std::optional<Rational>> cells_;
};

/// phi of W_a o W_b = phi(a,b) W_{a+b}, either as a polynomial in the left
/// index `n`, right index `m` and parameters, or as a finite table.
class GradedStructure {
 public:
  /// `expr` may only use n, m and parameter names; bound parameters are
  /// substituted on evaluation, unbound ones stay formal.
  static GradedStructure symbolic(MultiPoly expr, Bindings bindings = {});

  /// Builds a table; throws InvalidArgument unless every domain pair is set.
  static GradedStructure table(StructureTable table);

  bool is_symbolic() const { return kind_ == Kind::Symbolic; }
  bool is_table() const { return kind_ == Kind::Table; }

  /// Symbolic structures with every parameter bound, and all tables.
  bool evaluable() const;
  std::set<std::string> formal_parameters() const;

  /// Coefficient of W_left o W_right. Throws OutOfWindow or UnboundVariable.
  Rational phi(long left, long right) const;

  /// Symbolic: the expression with bound parameters substituted and the
  /// left/right indices replaced by the given polynomials.
  MultiPoly phi_symbolic(const MultiPoly& left, const MultiPoly& right) const;

  const MultiPoly& expression() const;      // as given (symbolic only)
  const MultiPoly& bound_expression() const;  // bindings applied (symbolic only)
  const Bindings& bindings() const { return bindings_; }
  const StructureTable& table_data() const;   // table only

  /// Table of this structure on `w`. For tables `w` must fit inside the
  /// stored window; throws OutOfWindow otherwise.
  StructureTable materialize(const Window& w) const;
  GradedStructure materialized(const Window& w) const { return table(materialize(w)); }

 private:
  enum class Kind { Symbolic, Table };
  GradedStructure() = default;

  Kind kind_ = Kind::Symbolic;
  MultiPoly expr_;
  MultiPoly bound_;
  Bindings bindings_;
  std::optional<StructureTable> table_;
};

}  // namespace gal
