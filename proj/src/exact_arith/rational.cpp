#include "gal/rational.hpp"

#include <cctype>
#include <ostream>

#include "gal/errors.hpp"

namespace gal {

Rational::Rational(long long num, long long den) : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto digits = [&](const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError(pos + 1, std::string("expected ") + what);
    return std::string(text.substr(start, pos - start));
  };
  mpz_class num(digits("digits"));
  mpz_class den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_at = pos + 1;
    den = mpz_class(digits("denominator digits"));
    if (den == 0) throw ParseError(den_at, "denominator must be positive");
  }
  if (pos != text.size()) throw ParseError(pos + 1, "unexpected character in rational literal");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) return std::nullopt;
  return q_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gal
