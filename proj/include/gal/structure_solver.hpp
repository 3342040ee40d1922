#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gal/graded_structure.hpp"

namespace gal {

/// Default branch budget; GAL_BUDGET overrides it where the CLI reads it.
inline constexpr std::size_t kDefaultBudget = 10000;

enum class SolveStatus {
  Complete,        // search tree fully explored
  BudgetExceeded,  // node budget hit; the solution list may be partial
  Stalled,         // some branch had no applicable rule; listed in `frontier`
};

std::string solve_status_name(SolveStatus s);

struct SearchLog {
  std::size_t nodes = 0;     // branches visited
  std::size_t pruned = 0;    // branches closed by a contradiction
  std::size_t stalled = 0;   // branches left undecided
  std::size_t duplicates = 0;
};

struct AnsatzProblem {
  unsigned max_total_degree = 1;
  std::optional<Rational> pin;  // value of phi(0,0)
  std::size_t budget = kDefaultBudget;
};

/// phi = sum c{p}{q} n^p m^q with p + q <= D, where n is the left and m the
/// right index. Each solution is the substituted polynomial; coefficients
/// left undetermined are free parameters and `relations` records how the
/// eliminated coefficients were fixed, in elimination order.
struct AnsatzSolution {
  MultiPoly phi;
  std::vector<std::string> free_parameters;
  std::vector<std::pair<std::string, MultiPoly>> relations;

  /// Symbolic structure with the free parameters formal.
  GradedStructure structure() const;
};

struct AnsatzOutcome {
  SolveStatus status = SolveStatus::Complete;
  std::vector<AnsatzSolution> solutions;
  SearchLog log;
  /// Undecided equation systems (canonical text), one entry per stalled branch.
  std::vector<std::vector<std::string>> frontier;
};

/// Throws InvalidArgument for D = 0.
AnsatzOutcome solve_ansatz(const AnsatzProblem& p);

struct TableOutcome {
  SolveStatus status = SolveStatus::Complete;
  Window window;
  std::vector<GradedStructure> solutions;  // tables, canonically sorted
  SearchLog log;
  /// For stalled or cut branches: number of still-unknown table entries.
  std::vector<std::size_t> frontier;
  /// Smallest radius r <= window radius whose search completed with exactly
  /// one table (computed only when requested).
  std::optional<int> uniqueness_radius;
};

/// Unknown phi(a,b) on the table domain of `w`, phi(0,0) = phi00, linear-1
/// used to pair (a,b) with (b,a), linear-2 instances propagated with
/// branching on their rational roots. Requires radius >= 3.
TableOutcome solve_table(const Window& w, const Rational& phi00, std::size_t budget = kDefaultBudget,
                         bool probe_uniqueness = false);

}  // namespace gal
