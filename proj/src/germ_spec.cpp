#include "germ/germ_spec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "germ/poly_parser.hpp"

namespace germ {

namespace {

struct Token {
  enum class Kind { Ident, Int, String, Symbol, End } kind;
  std::string text;
  int line, col;
};

struct SpecLexer {
  const std::string& s;
  std::size_t pos = 0;
  int line = 1, col = 1;

  [[noreturn]] void fail(int l, int c, const std::string& msg) const {
    throw InputError("germ spec error at line " + std::to_string(l) + ", col " +
                     std::to_string(c) + ": " + msg);
  }

  void advance() {
    if (s[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  Token next() {
    while (pos < s.size()) {
      char c = s[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos < s.size() && s[pos] != '\n') advance();
      } else {
        break;
      }
    }
    if (pos >= s.size()) return {Token::Kind::End, "", line, col};
    int l = line, c0 = col;
    char c = s[pos];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string t;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
        t += s[pos];
        advance();
      }
      return {Token::Kind::Ident, t, l, c0};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1])))) {
      std::string t;
      if (c == '-') {
        t += c;
        advance();
      }
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        t += s[pos];
        advance();
      }
      return {Token::Kind::Int, t, l, c0};
    }
    if (c == '"') {
      advance();
      std::string t;
      while (pos < s.size() && s[pos] != '"') {
        t += s[pos];
        advance();
      }
      if (pos >= s.size()) fail(l, c0, "unterminated string");
      advance();
      return {Token::Kind::String, t, l, c0};
    }
    if (std::string("{}[]=(),").find(c) != std::string::npos) {
      advance();
      return {Token::Kind::Symbol, std::string(1, c), l, c0};
    }
    fail(l, c0, std::string("unexpected character '") + c + "'");
  }
};

struct SpecParser {
  SpecLexer lx;
  Token cur;

  explicit SpecParser(const std::string& text) : lx{text} { cur = lx.next(); }

  [[noreturn]] void fail(const std::string& msg) { lx.fail(cur.line, cur.col, msg); }

  Token take() {
    Token t = cur;
    cur = lx.next();
    return t;
  }
  void expect_symbol(const std::string& sym) {
    if (cur.kind != Token::Kind::Symbol || cur.text != sym)
      fail("expected '" + sym + "', got '" + cur.text + "'");
    take();
  }
  std::string expect_ident() {
    if (cur.kind != Token::Kind::Ident) fail("expected identifier, got '" + cur.text + "'");
    return take().text;
  }
  long expect_int() {
    if (cur.kind != Token::Kind::Int) fail("expected integer, got '" + cur.text + "'");
    return std::stol(take().text);
  }
  std::string expect_string() {
    if (cur.kind != Token::Kind::String) fail("expected string, got '" + cur.text + "'");
    return take().text;
  }

  std::vector<std::string> string_list() {
    expect_symbol("[");
    std::vector<std::string> out;
    while (!(cur.kind == Token::Kind::Symbol && cur.text == "]")) {
      out.push_back(expect_string());
      if (cur.kind == Token::Kind::Symbol && cur.text == ",") take();
    }
    expect_symbol("]");
    return out;
  }

  GermSpec parse() {
    if (expect_ident() != "germ") fail("expected 'germ'");
    GermSpec spec;
    spec.name = expect_ident();
    expect_symbol("{");
    bool saw_n = false, saw_p = false, saw_vars = false;
    std::vector<std::string> comp_texts, stab_texts;
    while (!(cur.kind == Token::Kind::Symbol && cur.text == "}")) {
      std::string key = expect_ident();
      if (key == "n") {
        expect_symbol("=");
        spec.n = static_cast<int>(expect_int());
        saw_n = true;
      } else if (key == "p") {
        expect_symbol("=");
        spec.p = static_cast<int>(expect_int());
        saw_p = true;
      } else if (key == "vars") {
        expect_symbol("=");
        expect_symbol("[");
        while (!(cur.kind == Token::Kind::Symbol && cur.text == "]")) {
          spec.var_names.push_back(expect_ident());
          if (cur.kind == Token::Kind::Symbol && cur.text == ",") take();
        }
        expect_symbol("]");
        saw_vars = true;
      } else if (key == "comps") {
        expect_symbol("=");
        comp_texts = string_list();
      } else if (key == "stab") {
        expect_symbol("(");
        spec.stab_param = expect_ident();
        expect_symbol(")");
        expect_symbol("=");
        stab_texts = string_list();
      } else if (key == "expect") {
        expect_symbol("{");
        while (!(cur.kind == Token::Kind::Symbol && cur.text == "}")) {
          std::string ek = expect_ident();
          expect_symbol("=");
          if (cur.kind == Token::Kind::Int) {
            spec.expect_ints[ek] = expect_int();
          } else if (cur.kind == Token::Kind::String) {
            spec.expect_strings[ek] = expect_string();
          } else if (cur.kind == Token::Kind::Ident) {
            spec.expect_strings[ek] = expect_ident();  // pass / fail
          } else {
            fail("expected value for '" + ek + "'");
          }
        }
        expect_symbol("}");
      } else {
        fail("unknown key '" + key + "'");
      }
    }
    expect_symbol("}");

    if (!saw_n || !saw_p || !saw_vars || comp_texts.empty())
      fail("germ spec needs n, p, vars and comps");
    if (spec.p <= spec.n) fail("requires p > n");
    if (static_cast<int>(spec.var_names.size()) != spec.n)
      fail("expected " + std::to_string(spec.n) + " variables (unfolding variables then z)");
    if (static_cast<int>(comp_texts.size()) != spec.p - spec.n + 1)
      fail("needs " + std::to_string(spec.p - spec.n + 1) + " components, got " +
           std::to_string(comp_texts.size()));

    std::set<std::string> allowed(spec.var_names.begin(), spec.var_names.end());
    for (auto& t : comp_texts) {
      Polynomial h = parse_polynomial(t, &allowed);
      if (h.constant_term() != 0)
        fail("component \"" + t + "\" does not vanish at the origin");
      spec.components.push_back(std::move(h));
    }
    if (spec.stab_param) {
      if (stab_texts.size() != comp_texts.size())
        fail("stabilisation needs the same number of components");
      if (allowed.count(*spec.stab_param))
        fail("stabilisation parameter collides with a germ variable");
      std::set<std::string> allowed_s = allowed;
      allowed_s.insert(*spec.stab_param);
      for (auto& t : stab_texts)
        spec.stab_components.push_back(parse_polynomial(t, &allowed_s));
    }
    return spec;
  }
};

}  // namespace

MapGerm GermSpec::to_map_germ() const {
  MapGerm f;
  f.name = name;
  f.n = n;
  f.p = p;
  for (int i = 0; i < n - 1; ++i) f.x_vars.push_back(intern_variable(var_names[i]));
  f.z_var = intern_variable(var_names.back());
  f.components = components;
  f.validate();
  return f;
}

StabilisationFamily GermSpec::to_family() const {
  if (!has_stab()) throw InputError(name + ": no stabilisation block");
  StabilisationFamily fam;
  fam.base = to_map_germ();
  fam.s_var = intern_variable(*stab_param);
  fam.components = stab_components;
  fam.validate();
  return fam;
}

std::string GermSpec::print() const {
  std::ostringstream os;
  os << "germ " << name << " {\n";
  os << "  n = " << n << "\n  p = " << p << "\n";
  os << "  vars = [";
  for (std::size_t i = 0; i < var_names.size(); ++i)
    os << (i ? ", " : "") << var_names[i];
  os << "]\n  comps = [";
  for (std::size_t i = 0; i < components.size(); ++i)
    os << (i ? ", " : "") << '"' << components[i].str() << '"';
  os << "]\n";
  if (has_stab()) {
    os << "  stab(" << *stab_param << ") = [";
    for (std::size_t i = 0; i < stab_components.size(); ++i)
      os << (i ? ", " : "") << '"' << stab_components[i].str() << '"';
    os << "]\n";
  }
  if (!expect_ints.empty() || !expect_strings.empty()) {
    os << "  expect {\n";
    for (auto& [k, v] : expect_ints) os << "    " << k << " = " << v << "\n";
    for (auto& [k, v] : expect_strings) {
      bool word = (v == "pass" || v == "fail");
      os << "    " << k << " = " << (word ? v : '"' + v + '"') << "\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

GermSpec parse_germ_spec(const std::string& text) {
  SpecParser p(text);
  return p.parse();
}

GermSpec load_germ_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open germ spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_germ_spec(buf.str());
}

}  // namespace germ
