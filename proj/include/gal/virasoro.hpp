#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gal/graded_structure.hpp"
#include "gal/laws.hpp"

namespace gal {

/// Candidate product on the Virasoro algebra: the W-part is the family
/// with parameter `gamma`, the central element acts trivially, and
/// psi[m] is the central coefficient of W_m o W_{-m}.
struct CentralStructure {
  Rational gamma;
  std::map<long, Rational> psi;
};

enum class CentralEq { Vir3, Vir4, Vir5 };

std::string central_eq_name(CentralEq e);
std::optional<CentralEq> parse_central_eq(std::string_view name);

/// Which equation families take part in a check or solve.
struct CentralFamilies {
  bool vir3 = true;
  bool vir4 = true;
  bool vir5 = true;

  bool includes(CentralEq e) const;
};

// Row residuals, each required to vanish:
//   Vir-3 (m):    psi_m - psi_{-m} - (m^3 - m)/12
//   Vir-4 (m,n):  (gamma+m-n) psi_n - (gamma+n-m) psi_m - (m-n) psi_{m+n}
//   Vir-5 (m):    (gamma+m) psi_0 - gamma psi_m

/// Residuals over the window: Vir-3 and Vir-5 for every m, Vir-4 for every
/// (m,n) with m+n in the window. Throws InvalidArgument if psi misses an index.
LawReport check_central(const CentralStructure& c, const Window& w, const CentralFamilies& families = {});

/// linear-1/linear-2 residuals of the W-part on the window.
LawReport check_central_w_part(const Rational& gamma, const Window& w);

struct CertificateRow {
  CentralEq eq = CentralEq::Vir3;
  long m = 0;
  long n = 0;  // Vir-4 only
  Rational coef;
};

/// sum coef * residual(row) is the constant `contradiction` for every psi,
/// so the rows cannot vanish together.
struct InfeasibilityCertificate {
  std::vector<CertificateRow> rows;
  Rational contradiction;
};

struct CentralOutcome {
  bool feasible = false;
  std::map<long, Rational> psi;
  /// Unknowns left free by the system (set to 0 in `psi`).
  std::vector<long> free_indices;
  std::optional<InfeasibilityCertificate> certificate;
  std::size_t rows_used = 0;
};

/// Exact incremental elimination over the unknowns psi_m of the window.
/// Rows enter in a fixed order: Vir-5 (m outward), Vir-4 at n = -m
/// (m = 1..N), Vir-3 (m = 1..N), then the remaining Vir-4 pairs (m,n) with
/// m, n nonzero, m != +-n, m before n in outward order. The first row that
/// reduces to 0 = r != 0 closes the certificate. Unknown pivots follow |m|
/// then sign. Requires radius >= 3.
CentralOutcome solve_central(const Rational& gamma, const Window& w, const CentralFamilies& families = {});

/// Recomputes every row from scratch and checks the combination.
bool verify_certificate(const Rational& gamma, const Window& w, const InfeasibilityCertificate& cert);

}  // namespace gal
