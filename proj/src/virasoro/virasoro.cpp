#include "gal/virasoro.hpp"

#include <algorithm>
#include <stdexcept>

#include "gal/classification.hpp"
#include "gal/errors.hpp"

namespace gal {

namespace {

/// Linear form sum coef[m] psi_m + constant.
struct Linear {
  std::map<long, Rational> coef;
  Rational constant;

  void add(long m, const Rational& c) {
    auto& slot = coef[m];
    slot += c;
    if (slot.is_zero()) coef.erase(m);
  }
  void axpy(const Rational& s, const Linear& o) {
    for (const auto& [m, c] : o.coef) add(m, s * c);
    constant += s * o.constant;
  }
};

Rational cocycle(long m) { return Rational(m * m * m - m, 12); }

Linear row_form(const Rational& gamma, CentralEq eq, long m, long n) {
  Linear f;
  switch (eq) {
    case CentralEq::Vir3:
      f.add(m, Rational(1));
      f.add(-m, Rational(-1));
      f.constant = -cocycle(m);
      break;
    case CentralEq::Vir4:
      f.add(n, gamma + Rational(m - n));
      f.add(m, -(gamma + Rational(n - m)));
      f.add(m + n, Rational(n - m));
      break;
    case CentralEq::Vir5:
      f.add(0, gamma + Rational(m));
      f.add(m, -gamma);
      break;
  }
  return f;
}

/// Position of psi_m in the pivot order 0, 1, -1, 2, -2, ...
long pivot_rank(long m) { return m >= 0 ? 2 * m : -2 * m + 1; }

struct RowId {
  CentralEq eq;
  long m;
  long n;
};

std::vector<RowId> row_order(const Window& w, const CentralFamilies& fam) {
  const long r = w.radius;
  const auto order = outward_order(w);
  std::vector<RowId> rows;
  if (fam.vir5) {
    for (int m : order) rows.push_back({CentralEq::Vir5, m, 0});
  }
  if (fam.vir4) {
    for (long m = 1; m <= r; ++m) rows.push_back({CentralEq::Vir4, m, -m});
  }
  if (fam.vir3) {
    for (long m = 1; m <= r; ++m) rows.push_back({CentralEq::Vir3, m, 0});
  }
  if (fam.vir4) {
    for (std::size_t x = 0; x < order.size(); ++x) {
      for (std::size_t y = x + 1; y < order.size(); ++y) {
        long m = order[x], n = order[y];
        if (m == 0 || n == 0 || m == n || m == -n || !w.contains(m + n)) continue;
        rows.push_back({CentralEq::Vir4, m, n});
      }
    }
  }
  return rows;
}

Rational evaluate(const Linear& f, const std::map<long, Rational>& psi) {
  Rational v = f.constant;
  for (const auto& [m, c] : f.coef) v += c * psi.at(m);
  return v;
}

}  // namespace

std::string central_eq_name(CentralEq e) {
  switch (e) {
    case CentralEq::Vir3: return "Vir-3";
    case CentralEq::Vir4: return "Vir-4";
    case CentralEq::Vir5: return "Vir-5";
  }
  return "";
}

std::optional<CentralEq> parse_central_eq(std::string_view name) {
  for (CentralEq e : {CentralEq::Vir3, CentralEq::Vir4, CentralEq::Vir5}) {
    if (central_eq_name(e) == name) return e;
  }
  return std::nullopt;
}

bool CentralFamilies::includes(CentralEq e) const {
  switch (e) {
    case CentralEq::Vir3: return vir3;
    case CentralEq::Vir4: return vir4;
    case CentralEq::Vir5: return vir5;
  }
  return false;
}

LawReport check_central(const CentralStructure& c, const Window& w, const CentralFamilies& families) {
  const long r = w.radius;
  for (long m = -r; m <= r; ++m) {
    if (!c.psi.count(m)) throw InvalidArgument("psi is missing index " + std::to_string(m));
  }
  LawReport report;
  report.law = Law::VirasoroCentral;
  report.window = w;
  auto record = [&](CentralEq eq, long m, long n, bool two) {
    Rational v = evaluate(row_form(c.gamma, eq, m, n), c.psi);
    ++report.checked;
    if (v.is_zero()) return;
    Violation viol{central_eq_name(eq), {{"m", m}}, v};
    if (two) viol.indices.emplace_back("n", n);
    report.violations.push_back(std::move(viol));
  };
  if (families.vir3) {
    for (long m = -r; m <= r; ++m) record(CentralEq::Vir3, m, 0, false);
  }
  if (families.vir4) {
    for (long m = -r; m <= r; ++m) {
      for (long n = -r; n <= r; ++n) {
        if (w.contains(m + n)) {
          record(CentralEq::Vir4, m, n, true);
        } else {
          ++report.skipped;
        }
      }
    }
  }
  if (families.vir5) {
    for (long m = -r; m <= r; ++m) record(CentralEq::Vir5, m, 0, false);
  }
  return report;
}

LawReport check_central_w_part(const Rational& gamma, const Window& w) {
  return check_anti_pre_lie(family_structure(gamma), w);
}

CentralOutcome solve_central(const Rational& gamma, const Window& w, const CentralFamilies& families) {
  if (w.radius < 3) throw InvalidArgument("central solve needs a window radius of at least 3");

  struct Basis {
    long pivot;
    Linear form;
    std::map<std::size_t, Rational> combo;  // row index -> coefficient
  };
  const auto rows = row_order(w, families);
  std::vector<Basis> basis;
  CentralOutcome out;

  for (std::size_t k = 0; k < rows.size(); ++k) {
    const RowId& id = rows[k];
    Linear f = row_form(gamma, id.eq, id.m, id.n);
    std::map<std::size_t, Rational> combo{{k, Rational(1)}};
    for (const Basis& b : basis) {
      auto it = f.coef.find(b.pivot);
      if (it == f.coef.end()) continue;
      Rational s = -it->second / b.form.coef.at(b.pivot);
      f.axpy(s, b.form);
      for (const auto& [row, c] : b.combo) {
        auto& slot = combo[row];
        slot += s * c;
        if (slot.is_zero()) combo.erase(row);
      }
    }
    ++out.rows_used;
    if (f.coef.empty()) {
      if (f.constant.is_zero()) continue;
      InfeasibilityCertificate cert;
      for (const auto& [row, c] : combo) cert.rows.push_back({rows[row].eq, rows[row].m, rows[row].n, c});
      cert.contradiction = f.constant;
      out.certificate = std::move(cert);
      return out;
    }
    long pivot = std::min_element(f.coef.begin(), f.coef.end(), [](const auto& a, const auto& b) {
                   return pivot_rank(a.first) < pivot_rank(b.first);
                 })->first;
    basis.push_back({pivot, std::move(f), std::move(combo)});
  }

  // Back substitution; later rows never contain earlier pivots.
  const long r = w.radius;
  std::set<long> pivots;
  for (const auto& b : basis) pivots.insert(b.pivot);
  for (long m = -r; m <= r; ++m) {
    if (!pivots.count(m)) {
      out.psi[m] = Rational(0);
      out.free_indices.push_back(m);
    }
  }
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
    Rational rest = it->form.constant;
    for (const auto& [m, c] : it->form.coef) {
      if (m != it->pivot) rest += c * out.psi.at(m);
    }
    out.psi[it->pivot] = -rest / it->form.coef.at(it->pivot);
  }
  out.feasible = true;
  if (!check_central({gamma, out.psi}, w, families).pass()) {
    throw std::logic_error("central solution failed the independent check");
  }
  return out;
}

bool verify_certificate(const Rational& gamma, const Window& w, const InfeasibilityCertificate& cert) {
  if (cert.contradiction.is_zero() || cert.rows.empty()) return false;
  Linear total;
  for (const auto& row : cert.rows) {
    if (!w.contains(row.m) || !w.contains(-row.m)) return false;
    if (row.eq == CentralEq::Vir4 && (!w.contains(row.n) || !w.contains(row.m + row.n))) return false;
    total.axpy(row.coef, row_form(gamma, row.eq, row.m, row.n));
  }
  return total.coef.empty() && total.constant == cert.contradiction;
}

}  // namespace gal
