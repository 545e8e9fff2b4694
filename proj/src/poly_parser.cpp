#include "germ/poly_parser.hpp"

#include <cctype>

namespace germ {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial syntax error at offset " + std::to_string(pos) + ": " +
                     msg + " in \"" + s + "\"");
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    char c = peek();
    if (pos < s.size()) ++pos;
    return c;
  }
};

struct Parser {
  Lexer lx;
  const std::set<std::string>* allowed;

  Polynomial parse() {
    Polynomial p = expr();
    if (lx.peek() != '\0') lx.fail("trailing input");
    return p;
  }

  Polynomial expr() {
    bool neg = false;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.take();
      neg = (c == '-');
    }
    Polynomial p = term();
    if (neg) p = -p;
    while (true) {
      c = lx.peek();
      if (c != '+' && c != '-') break;
      lx.take();
      Polynomial t = term();
      if (c == '+')
        p += t;
      else
        p -= t;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (lx.peek() == '*') {
      lx.take();
      p = p * factor();
    }
    return p;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (lx.peek() == '^') {
      lx.take();
      if (!std::isdigit(static_cast<unsigned char>(lx.peek()))) lx.fail("expected exponent");
      long e = integer();
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  long integer() {
    lx.skip_ws();
    std::size_t start = lx.pos;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
      ++lx.pos;
    if (lx.pos == start) lx.fail("expected integer");
    return std::stol(lx.s.substr(start, lx.pos - start));
  }

  Polynomial primary() {
    char c = lx.peek();
    if (c == '(') {
      lx.take();
      Polynomial p = expr();
      if (lx.peek() != ')') lx.fail("expected ')'");
      lx.take();
      check_no_adjacent();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      Rational q(num);
      if (lx.peek() == '/') {
        lx.take();
        long den = integer();
        if (den == 0) lx.fail("zero denominator");
        q = Rational(num, den);
        q.canonicalize();
      }
      check_no_adjacent();
      return Polynomial::constant(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      if (allowed && !allowed->count(name))
        throw InputError("unknown variable '" + name + "'");
      check_no_adjacent();
      return Polynomial::variable(name);
    }
    lx.fail("expected number, variable or '('");
  }

  std::string identifier() {
    lx.skip_ws();
    std::size_t start = lx.pos;
    while (lx.pos < lx.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
      ++lx.pos;
    return lx.s.substr(start, lx.pos - start);
  }

  void check_no_adjacent() {
    char c = lx.peek();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(')
      lx.fail("implicit multiplication is not allowed");
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::set<std::string>* allowed_vars) {
  Parser p{Lexer{text}, allowed_vars};
  return p.parse();
}

}  // namespace germ
