#include "gal/multipoly.hpp"

#include <algorithm>

#include "gal/errors.hpp"

namespace gal {

Monomial Monomial::variable(const std::string& name, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(name, exponent);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [_, e] : factors_) d += e;
  return d;
}

unsigned Monomial::exponent(const std::string& name) const {
  for (const auto& [v, e] : factors_) {
    if (v == name) return e;
  }
  return 0;
}

Monomial Monomial::without(const std::string& name) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first != name) m.factors_.push_back(f);
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t k = 0;
  for (; k < fa.size() && k < fb.size(); ++k) {
    if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
    if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
  }
  return fa.size() > fb.size() && k < fa.size();
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

MultiPoly MultiPoly::variable(const std::string& name) {
  return term(Rational(1), Monomial::variable(name));
}

MultiPoly MultiPoly::term(const Rational& coefficient, const Monomial& monomial) {
  MultiPoly p;
  p.add_term(monomial, coefficient);
  return p;
}

MultiPoly MultiPoly::from_terms(const std::vector<std::pair<Monomial, Rational>>& terms) {
  MultiPoly p;
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational() : it->second;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

unsigned MultiPoly::degree_in(const std::string& name) const {
  unsigned d = 0;
  for (const auto& [m, _] : terms_) d = std::max(d, m.exponent(name));
  return d;
}

std::set<std::string> MultiPoly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, _] : terms_) {
    for (const auto& [v, _e] : m.factors()) out.insert(v);
  }
  return out;
}

namespace {

Rational rational_pow(const Rational& base, unsigned e) {
  Rational out(1);
  for (unsigned k = 0; k < e; ++k) out *= base;
  return out;
}

}  // namespace

Rational MultiPoly::eval(const Bindings& bindings) const {
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) throw UnboundVariable(v);
      value *= rational_pow(it->second, e);
    }
    total += value;
  }
  return total;
}

MultiPoly MultiPoly::bind(const Bindings& bindings) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Rational coefficient = c;
    Monomial rest;
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        rest = rest * Monomial::variable(v, e);
      } else {
        coefficient *= rational_pow(it->second, e);
      }
    }
    out.add_term(rest, coefficient);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& replacement) const {
  MultiPoly out;
  // Cache powers of each replacement; the same powers recur across terms.
  std::map<std::pair<std::string, unsigned>, MultiPoly> powers;
  auto power_of = [&](const std::string& v, unsigned e) -> const MultiPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, pow(replacement.at(v), e)).first->second;
  };
  for (const auto& [m, c] : terms_) {
    MultiPoly product = term(c, Monomial());
    Monomial kept;
    for (const auto& [v, e] : m.factors()) {
      if (replacement.count(v)) {
        product *= power_of(v, e);
      } else {
        kept = kept * Monomial::variable(v, e);
      }
    }
    if (!kept.is_one()) product *= term(Rational(1), kept);
    out += product;
  }
  return out;
}

std::map<Monomial, MultiPoly, GrlexDescending> MultiPoly::collect(const std::set<std::string>& vars) const {
  std::map<Monomial, MultiPoly, GrlexDescending> out;
  for (const auto& [m, c] : terms_) {
    Monomial key, rest;
    for (const auto& [v, e] : m.factors()) {
      if (vars.count(v)) {
        key = key * Monomial::variable(v, e);
      } else {
        rest = rest * Monomial::variable(v, e);
      }
    }
    out[key].add_term(rest, c);
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& name) const {
  std::vector<MultiPoly> out(degree_in(name) + 1);
  for (const auto& [m, c] : terms_) out[m.exponent(name)].add_term(m.without(name), c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly pow(const MultiPoly& p, long long exponent) {
  if (exponent < 0) throw InvalidArgument("negative exponent " + std::to_string(exponent));
  MultiPoly result(1);
  MultiPoly base = p;
  auto e = static_cast<unsigned long long>(exponent);
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  std::size_t top = coeffs.size();
  while (top > 0 && coeffs[top - 1].is_zero()) --top;
  if (top == 0) throw InvalidArgument("rational_roots of the zero polynomial");

  // Clear denominators to an integer polynomial.
  mpz_class lcm_den(1);
  for (std::size_t k = 0; k < top; ++k) lcm_den = lcm(lcm_den, coeffs[k].denominator());
  std::vector<mpz_class> ints;
  for (std::size_t k = 0; k < top; ++k) {
    mpq_class scaled = coeffs[k].value() * lcm_den;
    ints.push_back(scaled.get_num());
  }

  std::vector<Rational> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<mpz_class> reduced(ints.begin() + static_cast<long>(low), ints.end());
  if (reduced.size() <= 1) return roots;

  auto is_root = [&](const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) acc = acc * x + *it;
    return acc == 0;
  };

  if (reduced.size() == 2) {
    roots.emplace_back(mpz_class(-reduced[0]), reduced[1]);
  } else if (reduced.size() == 3) {
    const mpz_class& a = reduced[2];
    const mpz_class& b = reduced[1];
    const mpz_class& c = reduced[0];
    mpz_class disc = b * b - 4 * a * c;
    if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t()) != 0) {
      mpz_class s = sqrt(disc);
      roots.emplace_back(mpz_class(-b + s), mpz_class(2 * a));
      roots.emplace_back(mpz_class(-b - s), mpz_class(2 * a));
    }
  } else {
    for (const auto& p : positive_divisors(reduced.front())) {
      for (const auto& q : positive_divisors(reduced.back())) {
        for (int sgn : {1, -1}) {
          mpq_class x(mpz_class(sgn * p), q);
          x.canonicalize();
          if (is_root(x)) roots.emplace_back(x);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace gal
