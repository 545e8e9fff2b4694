#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "germ/error.hpp"

namespace germ {

// All coefficients are exact rationals. mpq_class keeps them reduced with a
// positive denominator, which is exactly the invariant we need.
using Rational = mpq_class;

std::string to_string(const Rational& q);

// Interned variable identifiers. The intern order is the fixed global
// ordering used for canonical forms.
int intern_variable(const std::string& name);
const std::string& variable_name(int id);

// Sparse exponent vector; zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(int v, int exp = 1);

  bool is_one() const { return exps_.empty(); }
  int degree() const;
  int exponent(int v) const;
  const std::vector<std::pair<int, int>>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divide_by(const Monomial& o) const;  // requires o.divides(*this)
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;
  bool is_pure_power_of(int v) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  // Structural order (graded, then lex on interned ids); canonical-form key,
  // unrelated to the Groebner orders.
  std::strong_ordering operator<=>(const Monomial& o) const;

  std::string str() const;

 private:
  std::vector<std::pair<int, int>> exps_;  // sorted by variable id
};

class Polynomial {
 public:
  Polynomial() = default;  // zero
  static Polynomial constant(const Rational& c);
  static Polynomial variable(int v);
  static Polynomial variable(const std::string& name);
  static Polynomial term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_unit() const { return is_constant() && !is_zero(); }
  int total_degree() const;  // -1 for zero
  int order() const;         // min total degree of a term; INT_MAX for zero
  int degree_in(int v) const;
  Rational constant_term() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::vector<int> variables() const;  // sorted ids of occurring variables

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  Polynomial derivative(int v) const;
  Polynomial substitute(const std::map<int, Polynomial>& bindings) const;

  // Divide out the rational content and fix the sign of the structurally
  // largest term; two polynomials equal up to a nonzero rational scalar have
  // equal primitive parts.
  Polynomial primitive_part() const;

  // Coefficients as polynomials in the remaining variables, indexed by the
  // exponent of v.
  std::map<int, Polynomial> coefficients_in(int v) const;

  void add_term(const Rational& c, const Monomial& m);  // c may be anything

  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;  // no zero coefficients
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// (f with v -> v1) minus (f with v -> v2), divided exactly by (v1 - v2).
// Computed term by term, so the division is exact by construction.
Polynomial divided_difference(const Polynomial& f, int v, int v1, int v2);

// Determinant of a square polynomial matrix by fraction-free Laplace
// expansion with memoisation on column subsets.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

// All maximal (r x r) minors of the Jacobian matrix of gens w.r.t. vars,
// r = |gens|. Throws InputError if |gens| > |vars|.
std::vector<Polynomial> jacobian_maximal_minors(const std::vector<Polynomial>& gens,
                                                const std::vector<int>& vars);

// Determinant of the Sylvester matrix of a and b in v. Both must have
// positive degree in v.
Polynomial sylvester_resultant(const Polynomial& a, const Polynomial& b, int v);

// Same, but with the usual convention for constants: Res(a, c) = c^deg(a),
// Res(c, c') = 1. Used where a degenerate double-point system is legitimate.
Polynomial resultant_allow_constant(const Polynomial& a, const Polynomial& b, int v);

}  // namespace germ
