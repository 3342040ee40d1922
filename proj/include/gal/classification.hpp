#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gal/graded_structure.hpp"
#include "gal/laws.hpp"

namespace gal {

/// Name of the family parameter in family expressions.
inline const std::string kFamilyParam = "g";

/// W_n o W_m = -(g + m + 2n) W_{m+n}, so phi(a,b) = -(g + b + 2a).
/// Without `gamma` the parameter stays formal.
GradedStructure family_structure(std::optional<Rational> gamma = std::nullopt);

struct FamilyMismatch {
  long left = 0;
  long right = 0;
  /// phi(left,right) + gamma + right + 2*left with gamma = -phi(0,0).
  Rational residual;
};

struct FitResult {
  std::optional<Rational> gamma;
  std::optional<FamilyMismatch> mismatch;
  bool fits() const { return gamma.has_value(); }
};

/// Reads gamma off phi(0,0) and checks every table pair on `w` against the
/// family. Pairs are visited column (a,0) first, then the rest, both in
/// outward index order; the first failing pair is reported.
FitResult fit_family(const GradedStructure& s, const Window& w);

/// Table of the product transported along W_m -> eps lambda^m W_{eps m}.
/// lambda cancels; eps = -1 gives phi'(a,b) = -phi(-a,-b).
GradedStructure transform_structure(const GradedStructure& s, int epsilon, const Rational& lambda, const Window& w);

struct IsoResult {
  bool isomorphic = false;
  /// +1 or -1 when isomorphic, 0 otherwise.
  int epsilon = 0;
};

IsoResult are_isomorphic(const GradedStructure& s1, const GradedStructure& s2, const Window& w);

enum class QDirection { ToNovikov, ToAdmissible };

std::string q_direction_name(QDirection d);
std::optional<QDirection> parse_q_direction(std::string_view name);

/// to_novikov:    phi'(a,b) = -(1/3)(phi(a,b) - 2 phi(b,a))
/// to_admissible: phi'(a,b) = phi(a,b) + 2 phi(b,a)
/// The result has the same kind as `s`; the two directions are inverse.
GradedStructure q_transform(const GradedStructure& s, QDirection d);

struct Diagnostics {
  struct Entry {
    std::string name;
    std::size_t checked = 0;
    std::vector<Violation> residuals;  // nonzero instances only
  };
  std::vector<Entry> equations;
  /// Indices m in the window with phi(m,0) = 0.
  std::vector<long> gamma1;
  /// Indices m in the window with phi(m,0) + 2m = phi(0,0).
  std::vector<long> gamma2;
};

/// Specializations of linear-2 at l=0, l=1, l=2, m=0 and m=l=0, plus the
/// column identity phi(m,0) + 2m - phi(0,0) ("column-0") and the two zero sets.
Diagnostics diagnostics_specializations(const GradedStructure& s, const Window& w);

}  // namespace gal
