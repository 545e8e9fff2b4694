#include "germ/polynomial.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <sstream>
#include <unordered_map>

namespace germ {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {
std::vector<std::string>& var_names() {
  static std::vector<std::string> names;
  return names;
}
std::map<std::string, int>& var_ids() {
  static std::map<std::string, int> ids;
  return ids;
}
}  // namespace

int intern_variable(const std::string& name) {
  auto& ids = var_ids();
  auto it = ids.find(name);
  if (it != ids.end()) return it->second;
  int id = static_cast<int>(var_names().size());
  var_names().push_back(name);
  ids.emplace(name, id);
  return id;
}

const std::string& variable_name(int id) { return var_names().at(id); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(int v, int exp) {
  Monomial m;
  if (exp > 0) m.exps_.emplace_back(v, exp);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : exps_) d += e;
  return d;
}

int Monomial::exponent(int v) const {
  for (auto& [w, e] : exps_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  auto a = exps_.begin(), b = o.exps_.begin();
  while (a != exps_.end() || b != o.exps_.end()) {
    if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
      r.exps_.push_back(*a++);
    } else if (a == exps_.end() || b->first < a->first) {
      r.exps_.push_back(*b++);
    } else {
      r.exps_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (auto& [v, e] : exps_)
    if (o.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
  Monomial r;
  for (auto& [v, e] : exps_) {
    int d = e - o.exponent(v);
    if (d > 0) r.exps_.emplace_back(v, d);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.exps_.begin(), j = b.exps_.begin();
  while (i != a.exps_.end() || j != b.exps_.end()) {
    if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first)) {
      r.exps_.push_back(*i++);
    } else if (i == a.exps_.end() || j->first < i->first) {
      r.exps_.push_back(*j++);
    } else {
      r.exps_.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (auto& [v, e] : exps_)
    if (o.exponent(v) > 0) return false;
  return true;
}

bool Monomial::is_pure_power_of(int v) const {
  return exps_.size() == 1 && exps_[0].first == v;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (int c = degree() - o.degree(); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return exps_ <=> o.exps_;
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (auto& [v, e] : exps_) {
    if (!s.empty()) s += "*";
    s += variable_name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  p.add_term(c, Monomial());
  return p;
}

Polynomial Polynomial::variable(int v) {
  Polynomial p;
  p.add_term(1, Monomial::variable(v));
  return p;
}

Polynomial Polynomial::variable(const std::string& name) {
  return variable(intern_variable(name));
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
  Polynomial p;
  p.add_term(c, m);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();  // structural order is graded
}

int Polynomial::order() const {
  if (terms_.empty()) return INT_MAX;
  return terms_.begin()->first.degree();
}

int Polynomial::degree_in(int v) const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<int> Polynomial::variables() const {
  std::vector<int> vs;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m.exponents())
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  return vs;
}

void Polynomial::add_term(const Rational& c, const Monomial& m) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) r.add_term(c1 * c2, m1 * m2);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::derivative(int v) const {
  Polynomial r;
  for (auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (e == 0) continue;
    Monomial d = m.divide_by(Monomial::variable(v));
    r.add_term(c * e, d);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& bindings) const {
  // Power cache per bound variable.
  std::map<int, std::vector<Polynomial>> powers;
  auto power = [&](int v, int e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * bindings.at(v));
    return cache[e];
  };
  Polynomial r;
  for (auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(c);
    Monomial rest;
    for (auto& [v, e] : m.exponents()) {
      if (bindings.count(v)) {
        t = t * power(v, e);
      } else {
        rest = rest * Monomial::variable(v, e);
      }
    }
    r += t * Polynomial::term(1, rest);
  }
  return r;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_.rbegin()->second < 0) scale = -scale;
  return *this * scale;
}

std::map<int, Polynomial> Polynomial::coefficients_in(int v) const {
  std::map<int, Polynomial> r;
  for (auto& [m, c] : terms_) {
    int e = m.exponent(v);
    Monomial rest = m.divide_by(Monomial::variable(v, e));
    r[e].add_term(c, rest);
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Structurally largest terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    Rational a = c < 0 ? Rational(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (it->first.is_one()) {
      s += to_string(a);
    } else {
      if (a != 1) s += to_string(a) + "*";
      s += it->first.str();
    }
  }
  return s;
}

// ---------------------------------------------------------- free functions

Polynomial divided_difference(const Polynomial& f, int v, int v1, int v2) {
  Polynomial r;
  for (auto& [m, c] : f.terms()) {
    int e = m.exponent(v);
    if (e == 0) continue;  // cancels in the difference
    Monomial rest = m.divide_by(Monomial::variable(v, e));
    for (int i = 0; i < e; ++i) {
      Monomial t = rest * Monomial::variable(v1, i) * Monomial::variable(v2, e - 1 - i);
      r.add_term(c, t);
    }
  }
  return r;
}

namespace {
Polynomial det_rec(const std::vector<std::vector<Polynomial>>& m, uint32_t cols,
                   std::unordered_map<uint32_t, Polynomial>& memo) {
  if (cols == 0) return Polynomial::constant(1);
  auto it = memo.find(cols);
  if (it != memo.end()) return it->second;
  int k = __builtin_popcount(cols);  // expand along row k-1
  Polynomial d;
  int sign = (k - 1) % 2 == 0 ? 1 : -1;  // cofactor sign (-1)^(row + column)
  for (int j = 0, seen = 0; j < 32; ++j) {
    if (!(cols & (1u << j))) continue;
    const Polynomial& a = m[k - 1][j];
    if (!a.is_zero()) {
      Polynomial sub = det_rec(m, cols & ~(1u << j), memo);
      if (sign > 0)
        d += a * sub;
      else
        d -= a * sub;
    }
    sign = -sign;
    ++seen;
  }
  memo.emplace(cols, d);
  return d;
}
}  // namespace

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(1);
  if (n > 31) throw InputError("determinant: matrix too large");
  for (auto& row : m)
    if (row.size() != n) throw InputError("determinant: matrix not square");
  std::unordered_map<uint32_t, Polynomial> memo;
  return det_rec(m, (1u << n) - 1, memo);
}

std::vector<Polynomial> jacobian_maximal_minors(const std::vector<Polynomial>& gens,
                                                const std::vector<int>& vars) {
  std::size_t r = gens.size(), n = vars.size();
  if (r > n) throw InputError("jacobian_maximal_minors: more generators than variables");
  std::vector<std::vector<Polynomial>> jac(r, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i][j] = gens[i].derivative(vars[j]);

  std::vector<Polynomial> minors;
  std::vector<std::size_t> cols(r);
  for (std::size_t i = 0; i < r; ++i) cols[i] = i;
  while (true) {
    std::vector<std::vector<Polynomial>> sub(r, std::vector<Polynomial>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sub[i][j] = jac[i][cols[j]];
    minors.push_back(determinant(sub));
    // next r-combination of {0..n-1}
    std::size_t i = r;
    while (i > 0 && cols[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < r; ++j) cols[j] = cols[j - 1] + 1;
  }
  return minors;
}

namespace {
Polynomial sylvester_det(const Polynomial& a, const Polynomial& b, int v) {
  auto ca = a.coefficients_in(v), cb = b.coefficients_in(v);
  int m = a.degree_in(v), n = b.degree_in(v);
  auto coef = [](std::map<int, Polynomial>& c, int i) {
    auto it = c.find(i);
    return it == c.end() ? Polynomial() : it->second;
  };
  int size = m + n;
  std::vector<std::vector<Polynomial>> s(size, std::vector<Polynomial>(size));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = coef(ca, m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = coef(cb, n - j);
  return determinant(s);
}
}  // namespace

Polynomial sylvester_resultant(const Polynomial& a, const Polynomial& b, int v) {
  if (a.degree_in(v) < 1 || b.degree_in(v) < 1)
    throw InputError("sylvester_resultant: operand constant in " + variable_name(v));
  return sylvester_det(a, b, v);
}

Polynomial resultant_allow_constant(const Polynomial& a, const Polynomial& b, int v) {
  int da = a.degree_in(v), db = b.degree_in(v);
  if (da < 1 && db < 1) return Polynomial::constant(1);
  if (db < 1) return b.pow(static_cast<unsigned>(da));
  if (da < 1) return a.pow(static_cast<unsigned>(db));
  return sylvester_det(a, b, v);
}

}  // namespace germ
