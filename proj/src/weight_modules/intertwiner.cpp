#include "gal/intertwiner.hpp"

#include <deque>
#include <set>

#include "gal/errors.hpp"

namespace gal {

namespace {

bool instance_defined(const WeightModule& A, const WeightModule& B, const Window& w, long k, long m, long i) {
  return in_table_domain(w, m, i) && A.defined(m, i) && B.defined(m, i + k);
}

std::vector<long> outward_longs(long bound) {
  std::vector<long> out{0};
  for (long x = 1; x <= bound; ++x) {
    out.push_back(x);
    out.push_back(-x);
  }
  return out;
}

/// Integer shifts k with a^B(0,k) = a^A(0,0), in outward order.
std::vector<long> candidate_shifts(const WeightModule& A, const WeightModule& B, const Window& w) {
  const Rational target = A.weight(0);
  std::set<long> found;
  auto poly = B.weight_polynomial();
  if (poly && !(*poly - MultiPoly(target)).is_constant()) {
    std::vector<Rational> coeffs;
    for (const auto& c : (*poly - MultiPoly(target)).coefficients_in("i")) coeffs.push_back(c.constant_term());
    for (const Rational& root : rational_roots(coeffs)) {
      if (auto k = root.to_long()) {
        if (B.defined(0, *k)) found.insert(*k);
      }
    }
  } else {
    const long bound = B.radius() ? *B.radius() : 2L * w.radius;
    for (long k = -bound; k <= bound; ++k) {
      if (B.defined(0, k) && B.weight(k) == target) found.insert(k);
    }
  }
  std::vector<long> out;
  long reach = 0;
  for (long k : found) reach = std::max(reach, k < 0 ? -k : k);
  for (long k : outward_longs(reach)) {
    if (found.count(k)) out.push_back(k);
  }
  return out;
}

std::vector<PropagationStep> chain_to(const std::map<long, PropagationStep>& parent, long node) {
  std::vector<PropagationStep> chain;
  for (auto it = parent.find(node); it != parent.end(); it = parent.find(it->second.from)) chain.push_back(it->second);
  return {chain.rbegin(), chain.rend()};
}

/// Value of c_to given c_from through instance (m,i). Empty when the step is
/// not a valid ratio edge.
std::optional<Rational> step_value(const WeightModule& A, const WeightModule& B, long k, const PropagationStep& s,
                                   const Rational& c_from) {
  const Rational pa = A.a(s.m, s.i);
  const Rational pb = B.a(s.m, s.i + k);
  if (pa.is_zero() || pb.is_zero()) return std::nullopt;
  if (s.from == s.i && s.to == s.m + s.i) return c_from * pb / pa;
  if (s.from == s.m + s.i && s.to == s.i) return c_from * pa / pb;
  return std::nullopt;
}

IntertwinerResult try_shift(const WeightModule& A, const WeightModule& B, const Window& w, long k) {
  IntertwinerResult out{w, k, {}, {}, std::nullopt};
  const long r = w.radius;

  for (long i = -r; i <= r; ++i) {
    if (!A.defined(0, i) || !B.defined(0, i + k)) continue;
    if (A.weight(i) != B.weight(i + k)) {
      IntertwinerInfeasible f;
      f.kind = IntertwinerInfeasible::Kind::WeightMismatch;
      f.k = k;
      f.i = i;
      f.lhs_coef = A.weight(i);
      f.rhs_coef = B.weight(i + k);
      f.message = "weight of u_" + std::to_string(i) + " is " + f.lhs_coef.str() + " but v_" + std::to_string(i + k) +
                  " has weight " + f.rhs_coef.str();
      out.infeasible = f;
      return out;
    }
  }

  std::map<long, Rational> c;
  std::map<long, PropagationStep> parent;
  std::map<long, long> root_of;
  const auto order = outward_longs(r);

  auto conflict = [&](IntertwinerInfeasible::Kind kind, long m, long i, const Rational& pa, const Rational& pb) {
    IntertwinerInfeasible f;
    f.kind = kind;
    f.k = k;
    f.m = m;
    f.i = i;
    f.lhs_coef = pa;
    f.rhs_coef = pb;
    if (kind == IntertwinerInfeasible::Kind::ForcedZero) {
      long forced = pa.is_zero() ? i : m + i;
      f.message = "instance (m,i)=(" + std::to_string(m) + "," + std::to_string(i) + ") forces c_" +
                  std::to_string(forced) + " = 0";
    } else {
      f.c_i = c.at(i);
      f.c_mi = c.at(m + i);
      f.chain_i = chain_to(parent, i);
      f.chain_mi = chain_to(parent, m + i);
      f.root = root_of.at(i);
      f.message = "instance (m,i)=(" + std::to_string(m) + "," + std::to_string(i) + ") needs " + pa.str() + "*c_" +
                  std::to_string(m + i) + " = " + pb.str() + "*c_" + std::to_string(i) + " but c_" +
                  std::to_string(i) + " = " + f.c_i.str() + " and c_" + std::to_string(m + i) + " = " + f.c_mi.str();
    }
    out.infeasible = f;
  };

  for (long start : order) {
    if (c.count(start)) continue;
    c[start] = Rational(1);
    root_of[start] = start;
    if (start != 0) out.free_indices.push_back(start);
    std::deque<long> queue{start};
    while (!queue.empty()) {
      const long x = queue.front();
      queue.pop_front();
      for (long m : order) {
        if (m == 0) continue;
        // x plays the role of i, then of m+i.
        for (long i : {x, x - m}) {
          if (!instance_defined(A, B, w, k, m, i)) continue;
          const Rational pa = A.a(m, i);
          const Rational pb = B.a(m, i + k);
          if (pa.is_zero() && pb.is_zero()) continue;
          if (pa.is_zero() || pb.is_zero()) {
            conflict(IntertwinerInfeasible::Kind::ForcedZero, m, i, pa, pb);
            return out;
          }
          const long y = (i == x) ? m + i : i;
          PropagationStep step{m, i, x, y};
          Rational value = *step_value(A, B, k, step, c.at(x));
          auto it = c.find(y);
          if (it == c.end()) {
            c.emplace(y, value);
            parent.emplace(y, step);
            root_of[y] = start;
            queue.push_back(y);
          } else if (it->second != value) {
            conflict(IntertwinerInfeasible::Kind::InconsistentRatio, m, i, pa, pb);
            return out;
          }
        }
      }
    }
  }
  out.coefficients = std::move(c);
  return out;
}

}  // namespace

std::string infeasible_kind_name(IntertwinerInfeasible::Kind k) {
  switch (k) {
    case IntertwinerInfeasible::Kind::NoShift: return "no-shift";
    case IntertwinerInfeasible::Kind::WeightMismatch: return "weight-mismatch";
    case IntertwinerInfeasible::Kind::InconsistentRatio: return "inconsistent-ratio";
    case IntertwinerInfeasible::Kind::ForcedZero: return "forced-zero";
  }
  return "";
}

IntertwinerResult find_intertwiner(const WeightModule& A, const WeightModule& B, const Window& w) {
  if (A.kind() != WeightModule::Kind::Custom) A.require_distinct_weights(w);
  const auto shifts = candidate_shifts(A, B, w);
  if (shifts.empty()) {
    IntertwinerResult out{w, std::nullopt, {}, {}, IntertwinerInfeasible{}};
    out.infeasible->kind = IntertwinerInfeasible::Kind::NoShift;
    out.infeasible->lhs_coef = A.weight(0);
    out.infeasible->message = "no basis vector of the target has weight " + A.weight(0).str();
    return out;
  }
  std::optional<IntertwinerResult> first_failure;
  for (long k : shifts) {
    IntertwinerResult r = try_shift(A, B, w, k);
    if (r.found()) return r;
    if (!first_failure) first_failure = std::move(r);
  }
  return *first_failure;
}

bool verify_intertwiner(const WeightModule& A, const WeightModule& B, const Window& w, long k,
                        const std::map<long, Rational>& c) {
  const long r = w.radius;
  for (long i = -r; i <= r; ++i) {
    auto it = c.find(i);
    if (it == c.end() || it->second.is_zero()) return false;
  }
  for (long m = -r; m <= r; ++m) {
    for (long i = -r; i <= r; ++i) {
      if (!instance_defined(A, B, w, k, m, i)) continue;
      if (A.a(m, i) * c.at(m + i) != c.at(i) * B.a(m, i + k)) return false;
    }
  }
  return true;
}

bool verify_infeasible(const WeightModule& A, const WeightModule& B, const Window& w,
                       const IntertwinerInfeasible& cert) {
  using Kind = IntertwinerInfeasible::Kind;
  if (cert.kind == Kind::NoShift) {
    const long bound = B.radius() ? *B.radius() : 64L * w.radius;
    for (long k = -bound; k <= bound; ++k) {
      if (B.defined(0, k) && B.weight(k) == A.weight(0)) return false;
    }
    return cert.lhs_coef == A.weight(0);
  }
  if (!cert.k) return false;
  const long k = *cert.k;
  if (cert.kind == Kind::WeightMismatch) {
    return A.defined(0, cert.i) && B.defined(0, cert.i + k) && A.weight(cert.i) != B.weight(cert.i + k);
  }
  if (!instance_defined(A, B, w, k, cert.m, cert.i)) return false;
  const Rational pa = A.a(cert.m, cert.i);
  const Rational pb = B.a(cert.m, cert.i + k);
  if (cert.kind == Kind::ForcedZero) return pa.is_zero() != pb.is_zero();

  // Replay both chains from the root.
  auto replay = [&](const std::vector<PropagationStep>& chain, long target) -> std::optional<Rational> {
    long node = cert.root;
    Rational value(1);
    for (const auto& s : chain) {
      if (s.from != node || !instance_defined(A, B, w, k, s.m, s.i)) return std::nullopt;
      auto next = step_value(A, B, k, s, value);
      if (!next) return std::nullopt;
      value = *next;
      node = s.to;
    }
    if (node != target) return std::nullopt;
    return value;
  };
  auto ci = replay(cert.chain_i, cert.i);
  auto cmi = replay(cert.chain_mi, cert.m + cert.i);
  if (!ci || !cmi) return false;
  return *ci == cert.c_i && *cmi == cert.c_mi && pa * *cmi != *ci * pb;
}

}  // namespace gal
