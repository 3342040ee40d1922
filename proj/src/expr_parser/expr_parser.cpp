#include "gal/expr_parser.hpp"

#include <cctype>

#include "gal/errors.hpp"

namespace gal {

namespace {

constexpr unsigned kMaxExponent = 256;

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;  // 1-based
};

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r')) {
      ++pos_;
    }
    std::size_t at = pos_ + 1;
    if (pos_ >= src_.size()) return {Tok::End, "", at};
    char c = src_[pos_];
    if (is_digit(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      return {Tok::Int, std::string(src_.substr(start, pos_ - start)), at};
    }
    if (is_alpha(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (is_alpha(src_[pos_]) || is_digit(src_[pos_]))) ++pos_;
      return {Tok::Ident, std::string(src_.substr(start, pos_ - start)), at};
    }
    ++pos_;
    switch (c) {
      case '+': return {Tok::Plus, "+", at};
      case '-': return {Tok::Minus, "-", at};
      case '*': return {Tok::Star, "*", at};
      case '^': return {Tok::Caret, "^", at};
      case '/': return {Tok::Slash, "/", at};
      case '(': return {Tok::LParen, "(", at};
      case ')': return {Tok::RParen, ")", at};
      default: break;
    }
    if (c == '.') throw ParseError(at, "floating-point literals are not supported");
    throw ParseError(at, "unexpected character '" + std::string(1, c) + "'");
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Int: return "number '" + t.text + "'";
    case Tok::Ident: return "identifier '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  Parser(std::string_view src, const std::set<std::string>& params) : lexer_(src), params_(params) {
    advance();
  }

  MultiPoly parse() {
    MultiPoly p = expr();
    if (cur_.kind != Tok::End) {
      if (cur_.kind == Tok::Slash) {
        throw ParseError(cur_.offset, "unexpected '/': division is only allowed inside rational literals");
      }
      if (cur_.kind == Tok::Int || cur_.kind == Tok::Ident || cur_.kind == Tok::LParen) {
        throw ParseError(cur_.offset, "unexpected " + describe(cur_) + " (implicit multiplication is not supported)");
      }
      throw ParseError(cur_.offset, "unexpected " + describe(cur_));
    }
    return p;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  MultiPoly expr() {
    MultiPoly p = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      advance();
      MultiPoly q = term();
      if (minus) {
        p -= q;
      } else {
        p += q;
      }
    }
    return p;
  }

  MultiPoly term() {
    MultiPoly p = factor();
    while (cur_.kind == Tok::Star) {
      advance();
      p *= factor();
    }
    return p;
  }

  MultiPoly factor() {
    MultiPoly p = atom();
    if (cur_.kind == Tok::Caret) {
      advance();
      if (cur_.kind != Tok::Int) {
        throw ParseError(cur_.offset, "exponent must be a non-negative integer literal");
      }
      if (cur_.text.size() > 4 || std::stoul(cur_.text) > kMaxExponent) {
        throw ParseError(cur_.offset, "exponent exceeds " + std::to_string(kMaxExponent));
      }
      unsigned e = static_cast<unsigned>(std::stoul(cur_.text));
      advance();
      p = pow(p, e);
    }
    return p;
  }

  MultiPoly atom() {
    switch (cur_.kind) {
      case Tok::Int: {
        mpz_class num(cur_.text);
        advance();
        mpz_class den(1);
        if (cur_.kind == Tok::Slash) {
          advance();
          if (cur_.kind != Tok::Int) {
            throw ParseError(cur_.offset, "expected positive integer denominator after '/'");
          }
          den = mpz_class(cur_.text);
          if (den == 0) throw ParseError(cur_.offset, "denominator must be positive");
          advance();
        }
        return MultiPoly(Rational(num, den));
      }
      case Tok::Ident: {
        if (!kGradingVariables.count(cur_.text) && !params_.count(cur_.text)) {
          throw ParseError(cur_.offset, "unknown identifier '" + cur_.text + "'");
        }
        MultiPoly v = MultiPoly::variable(cur_.text);
        advance();
        return v;
      }
      case Tok::LParen: {
        advance();
        MultiPoly inner = expr();
        if (cur_.kind != Tok::RParen) throw ParseError(cur_.offset, "expected ')' but found " + describe(cur_));
        advance();
        return inner;
      }
      case Tok::Minus: {
        advance();
        return -atom();
      }
      default:
        throw ParseError(cur_.offset, "expected a number, identifier, '(' or '-' but found " + describe(cur_));
    }
  }

  Lexer lexer_;
  const std::set<std::string>& params_;
  Token cur_{Tok::End, "", 1};
};

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

MultiPoly parse_expression(std::string_view text, const std::set<std::string>& allowed_params) {
  return Parser(text, allowed_params).parse();
}

std::string format_canonical(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    bool negative = coeff.sign() < 0;
    Rational magnitude = coeff.abs();
    std::string body;
    if (mono.is_one()) {
      body = magnitude.str();
    } else if (magnitude == Rational(1)) {
      body = monomial_text(mono);
      // A leading "-x^2" would read back as (-x)^2.
      if (first && negative && mono.factors().front().second > 1) body = "1*" + body;
    } else {
      body = magnitude.str() + "*" + monomial_text(mono);
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
    first = false;
  }
  return out;
}

bool is_identifier(std::string_view name) {
  if (name.empty() || !is_alpha(name.front())) return false;
  for (char c : name) {
    if (!is_alpha(c) && !is_digit(c)) return false;
  }
  return true;
}

}  // namespace gal
