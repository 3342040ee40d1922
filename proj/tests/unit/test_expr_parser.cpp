#include <doctest.h>

#include "gal/errors.hpp"
#include "gal/expr_parser.hpp"
#include "test_support.hpp"

using namespace gal;

namespace {

MultiPoly var(const char* v) { return MultiPoly::variable(v); }

std::size_t error_offset(const std::string& text, const std::set<std::string>& params = {}) {
  try {
    parse_expression(text, params);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse_expression("-(g + m + 2*n)", {"g"}) == -var("g") - var("m") - MultiPoly(2) * var("n"));
  CHECK(parse_expression("1/12*m^3 - 1/12*m") ==
        MultiPoly(Rational(1, 12)) * pow(var("m"), 3) - MultiPoly(Rational(1, 12)) * var("m"));
  CHECK(parse_expression("a + i + 2*m", {"a"}) == var("a") + var("i") + MultiPoly(2) * var("m"));
  CHECK(parse_expression("  m\t*\nn ") == var("m") * var("n"));
  CHECK(parse_expression("-g + m", {"g"}) == var("m") - var("g"));
  CHECK(parse_expression("-m^2") == var("m") * var("m"));
  CHECK(parse_expression("-(m^2)") == -(var("m") * var("m")));
  CHECK(parse_expression("2^3*m") == MultiPoly(8) * var("m"));
  CHECK(parse_expression("xi + m", {"xi"}) == var("xi") + var("m"));
  CHECK(parse_expression("m^0") == MultiPoly(1));
}

TEST_CASE("parse errors carry 1-based offsets") {
  CHECK(error_offset("(m^3 - m)/12") == 10);
  CHECK(error_offset("m +") == 4);
  CHECK(error_offset("2m") == 2);
  CHECK(error_offset("m ^ -1") == 5);
  CHECK(error_offset("m^x") == 3);
  CHECK(error_offset("q + m") == 1);
  CHECK(error_offset("(m + n") == 7);
  CHECK(error_offset("1.5*m") == 2);
  CHECK(error_offset("m $ n") == 3);
  CHECK(error_offset("1/0") == 3);
  CHECK(error_offset("m^999") == 3);
  CHECK(error_offset("") == 1);
  CHECK(error_offset("g", {}) == 1);
}

TEST_CASE("format examples") {
  CHECK(format_canonical(parse_expression("-(g + m + 2*n)", {"g"})) == "-g - m - 2*n");
  CHECK(format_canonical(MultiPoly()) == "0");
  CHECK(format_canonical(parse_expression("1/12*m^3 - 1/12*m")) == "1/12*m^3 - 1/12*m");
  CHECK(format_canonical(parse_expression("a + i + 2*m", {"a"})) == "a + i + 2*m");
  CHECK(format_canonical(-(var("m") * var("m"))) == "-1*m^2");
  CHECK(format_canonical(MultiPoly(Rational(-3, 4))) == "-3/4");
}

TEST_CASE("identifiers") {
  CHECK(is_identifier("xi"));
  CHECK(is_identifier("c01"));
  CHECK(!is_identifier("0c"));
  CHECK(!is_identifier(""));
  CHECK(!is_identifier("a_b"));
}

TEST_CASE("property: round trip parse(format(p)) == p") {
  const std::set<std::string> params{"g", "xi", "a"};
  for (int t = 0; t < 500; ++t) {
    MultiPoly p = gal::testing::random_poly({"m", "n", "l", "i", "g", "xi", "a"}, 6, 4);
    std::string text = format_canonical(p);
    CAPTURE(text);
    CHECK(parse_expression(text, params) == p);
  }
}
