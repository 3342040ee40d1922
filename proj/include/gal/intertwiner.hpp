#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gal/weight_module.hpp"

namespace gal {

/// One use of the intertwining equation a^A(m,i) c_{m+i} = c_i a^B(m,i+k):
/// c_to was derived from c_from through the instance (m, i).
struct PropagationStep {
  long m = 0;
  long i = 0;
  long from = 0;
  long to = 0;
};

struct IntertwinerInfeasible {
  enum class Kind {
    NoShift,              // no integer k with a^A(0,0) = a^B(0,k)
    WeightMismatch,       // k found but a^A(0,i) != a^B(0,i+k)
    InconsistentRatio,    // two derivations give different c_{m+i}
    ForcedZero,           // one side's coefficient vanishes, forcing some c_j = 0
  };
  Kind kind = Kind::NoShift;
  std::string message;
  std::optional<long> k;
  /// Offending instance (m, i); for WeightMismatch only `i` is used.
  long m = 0;
  long i = 0;
  Rational lhs_coef;  // a^A(m,i)
  Rational rhs_coef;  // a^B(m,i+k)
  /// Values c_i and c_{m+i} as derived (InconsistentRatio only).
  Rational c_i;
  Rational c_mi;
  /// Derivations of c_i and c_{m+i} from their common root (value 1).
  std::vector<PropagationStep> chain_i;
  std::vector<PropagationStep> chain_mi;
  long root = 0;
};

std::string infeasible_kind_name(IntertwinerInfeasible::Kind k);

/// Grading-aligned map u_i -> c_i v_{i+k}. On success every c_i is nonzero;
/// `free_indices` lists component roots whose value was set to 1 by choice
/// (c_0 is always fixed to 1 and is not listed).
struct IntertwinerResult {
  Window window;
  std::optional<long> k;
  std::map<long, Rational> coefficients;
  std::vector<long> free_indices;
  std::optional<IntertwinerInfeasible> infeasible;

  bool found() const { return !infeasible.has_value(); }
};

/// Searches for an intertwiner A -> B over the indices of `w`. Candidate
/// shifts solve a^A(0,0) = a^B(0,k) exactly; each is tried in order and the
/// first success is returned, otherwise the failure for the first candidate.
IntertwinerResult find_intertwiner(const WeightModule& A, const WeightModule& B, const Window& w);

/// Independent check of a claimed witness: every coefficient nonzero and
/// every instance with (m,i), (m,i+k) defined satisfied exactly.
bool verify_intertwiner(const WeightModule& A, const WeightModule& B, const Window& w, long k,
                        const std::map<long, Rational>& c);

/// Independent check of an infeasibility report against the modules.
bool verify_infeasible(const WeightModule& A, const WeightModule& B, const Window& w,
                       const IntertwinerInfeasible& cert);

}  // namespace gal
