#include <algorithm>
#include <map>
#include <stdexcept>

#include "gal/errors.hpp"
#include "gal/laws.hpp"
#include "gal/structure_solver.hpp"

namespace gal {

namespace {

/// phi(a,b) = unknown[id] + offset.
struct Ref {
  std::size_t id;
  Rational offset;
};

/// c + sum lin[u] x_u + sum quad[(u,v)] x_u x_v with u <= v.
struct Quad {
  Rational c;
  std::map<std::size_t, Rational> lin;
  std::map<std::pair<std::size_t, std::size_t>, Rational> quad;

  void drop_zeros() {
    std::erase_if(lin, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(quad, [](const auto& kv) { return kv.second.is_zero(); });
  }
  bool is_zero() const { return c.is_zero() && lin.empty() && quad.empty(); }
  std::vector<std::size_t> variables() const {
    std::vector<std::size_t> v;
    for (const auto& [u, _] : lin) v.push_back(u);
    for (const auto& [uv, _] : quad) {
      v.push_back(uv.first);
      v.push_back(uv.second);
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }
};

using Assignment = std::vector<std::optional<Rational>>;

/// Linear-2 instance: k phi(x) - phi(y1) phi(y2) + phi(y3) phi(y4).
struct Instance {
  Rational k;
  Ref x, y1, y2, y3, y4;
};

/// Affine value of a reference: either a constant or x_id + offset.
struct Affine {
  std::optional<std::size_t> id;
  Rational value;  // constant term
};

Affine affine(const Ref& r, const Assignment& a) {
  if (a[r.id]) return {std::nullopt, *a[r.id] + r.offset};
  return {r.id, r.offset};
}

void add_scaled(Quad& q, const Affine& x, const Rational& s) {
  q.c += s * x.value;
  if (x.id) q.lin[*x.id] += s;
}

void add_product(Quad& q, const Affine& x, const Affine& y, const Rational& s) {
  q.c += s * x.value * y.value;
  if (x.id) q.lin[*x.id] += s * y.value;
  if (y.id) q.lin[*y.id] += s * x.value;
  if (x.id && y.id) q.quad[{std::min(*x.id, *y.id), std::max(*x.id, *y.id)}] += s;
}

Quad reduce(const Instance& e, const Assignment& a) {
  Quad q;
  add_scaled(q, affine(e.x, a), e.k);
  add_product(q, affine(e.y1, a), affine(e.y2, a), Rational(-1));
  add_product(q, affine(e.y3, a), affine(e.y4, a), Rational(1));
  q.drop_zeros();
  return q;
}

struct System {
  Window window;
  std::vector<std::pair<int, int>> base;          // unknown id -> pair (a <= b)
  std::map<std::pair<int, int>, std::size_t> id;  // pair -> unknown id
  std::vector<Instance> instances;

  Ref ref(long a, long b) const {
    if (a <= b) return {id.at({static_cast<int>(a), static_cast<int>(b)}), Rational(0)};
    return {id.at({static_cast<int>(b), static_cast<int>(a)}), Rational(b - a)};
  }
};

System build(const Window& w) {
  System s{w, {}, {}, {}};
  StructureTable shape(w);
  for (auto [a, b] : shape.domain()) {
    if (a <= b) {
      s.id[{a, b}] = s.base.size();
      s.base.emplace_back(a, b);
    }
  }
  const long r = w.radius;
  for (long m = -r; m <= r; ++m) {
    for (long n = m + 1; n <= r; ++n) {
      for (long l = -r; l <= r; ++l) {
        if (!w.contains(m + n) || !w.contains(m + l) || !w.contains(n + l) || !w.contains(m + n + l)) continue;
        s.instances.push_back(
            {Rational(n - m), s.ref(m + n, l), s.ref(m, l), s.ref(n, m + l), s.ref(n, l), s.ref(m, n + l)});
      }
    }
  }
  return s;
}

enum class Step { Solved, Dead, Branched, Stalled };

Step propagate(const System& sys, Assignment& a, std::vector<Assignment>& children) {
  while (true) {
    bool changed = false;
    std::optional<std::pair<std::size_t, std::vector<Rational>>> candidate;
    std::optional<Quad> two_var;
    for (const auto& inst : sys.instances) {
      Quad q = reduce(inst, a);
      if (q.is_zero()) continue;
      auto vars = q.variables();
      if (vars.empty()) return Step::Dead;
      if (vars.size() == 1) {
        const std::size_t u = vars.front();
        Rational sq = q.quad.count({u, u}) ? q.quad.at({u, u}) : Rational(0);
        Rational li = q.lin.count(u) ? q.lin.at(u) : Rational(0);
        auto roots = rational_roots({q.c, li, sq});
        if (roots.empty()) return Step::Dead;
        if (roots.size() == 1) {
          a[u] = roots.front();
          changed = true;
          continue;
        }
        if (!candidate) candidate = std::make_pair(u, roots);
      } else if (vars.size() == 2 && !two_var) {
        two_var = q;
      }
    }
    if (changed) continue;
    if (std::all_of(a.begin(), a.end(), [](const auto& x) { return x.has_value(); })) return Step::Solved;
    if (candidate) {
      for (const auto& r : candidate->second) {
        Assignment child = a;
        child[candidate->first] = r;
        children.push_back(std::move(child));
      }
      return Step::Branched;
    }
    // alpha u v + beta u + gamma v + delta with alpha delta = beta gamma
    // factors as (alpha u + gamma)(v + beta/alpha).
    if (two_var) {
      auto vars = two_var->variables();
      const std::size_t u = vars[0], v = vars[1];
      if (two_var->quad.size() == 1 && two_var->quad.count({u, v})) {
        Rational alpha = two_var->quad.at({u, v});
        Rational beta = two_var->lin.count(u) ? two_var->lin.at(u) : Rational(0);
        Rational gamma = two_var->lin.count(v) ? two_var->lin.at(v) : Rational(0);
        if (alpha * two_var->c == beta * gamma) {
          Assignment left = a;
          left[u] = -gamma / alpha;
          Assignment right = a;
          right[v] = -beta / alpha;
          children.push_back(std::move(left));
          children.push_back(std::move(right));
          return Step::Branched;
        }
      }
    }
    return Step::Stalled;
  }
}

StructureTable to_table(const System& sys, const Assignment& a) {
  StructureTable t(sys.window);
  for (auto [x, y] : t.domain()) {
    Ref r = sys.ref(x, y);
    t.set(x, y, *a[r.id] + r.offset);
  }
  return t;
}

std::vector<std::string> serialize(const StructureTable& t) {
  std::vector<std::string> out;
  for (auto [a, b] : t.domain()) out.push_back(t.at(a, b).str());
  return out;
}

TableOutcome search(const Window& w, const Rational& phi00, std::size_t budget) {
  const System sys = build(w);
  TableOutcome out{SolveStatus::Complete, w, {}, {}, {}, std::nullopt};
  Assignment root(sys.base.size());
  root[sys.id.at({0, 0})] = phi00;

  std::vector<std::pair<std::vector<std::string>, StructureTable>> found;
  std::vector<Assignment> stack{std::move(root)};
  auto unknowns = [](const Assignment& a) {
    return static_cast<std::size_t>(std::count(a.begin(), a.end(), std::nullopt));
  };
  while (!stack.empty()) {
    if (out.log.nodes >= budget) {
      out.status = SolveStatus::BudgetExceeded;
      for (const auto& a : stack) out.frontier.push_back(unknowns(a));
      break;
    }
    Assignment a = std::move(stack.back());
    stack.pop_back();
    ++out.log.nodes;
    std::vector<Assignment> children;
    switch (propagate(sys, a, children)) {
      case Step::Dead:
        ++out.log.pruned;
        break;
      case Step::Stalled:
        ++out.log.stalled;
        out.frontier.push_back(unknowns(a));
        if (out.status == SolveStatus::Complete) out.status = SolveStatus::Stalled;
        break;
      case Step::Branched:
        for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
        break;
      case Step::Solved: {
        StructureTable t = to_table(sys, a);
        auto key = serialize(t);
        if (std::any_of(found.begin(), found.end(), [&](const auto& f) { return f.first == key; })) {
          ++out.log.duplicates;
          break;
        }
        found.emplace_back(std::move(key), std::move(t));
        break;
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [_, t] : found) {
    GradedStructure s = GradedStructure::table(std::move(t));
    if (!check_anti_pre_lie(s, w).pass()) {
      throw std::logic_error("table solution failed the independent anti-pre-Lie check");
    }
    out.solutions.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TableOutcome solve_table(const Window& w, const Rational& phi00, std::size_t budget, bool probe_uniqueness) {
  if (w.radius < 3) throw InvalidArgument("table search needs a window radius of at least 3");
  TableOutcome out = search(w, phi00, budget);
  if (probe_uniqueness) {
    for (int r = 1; r <= w.radius; ++r) {
      TableOutcome probe = r == w.radius ? out : search(Window(r), phi00, budget);
      if (probe.status == SolveStatus::Complete && probe.solutions.size() == 1) {
        out.uniqueness_radius = r;
        break;
      }
    }
  }
  return out;
}

}  // namespace gal
