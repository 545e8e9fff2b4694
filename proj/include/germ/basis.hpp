#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

struct MonomialOrder {
  enum class Kind {
    GlobalDegRevLex,   // well-order, 1 smallest
    LocalNegDegRevLex, // 1 largest; leading terms detect the local staircase
    HomogenizedLocal   // global order on (t, x): degree, then t-power, then
                       // revlex; used internally to compute local bases by
                       // homogenization (priority.front() is t)
  };
  Kind kind = Kind::GlobalDegRevLex;
  std::vector<int> priority;  // ambient variables, highest first

  static MonomialOrder global(std::vector<int> vars);
  static MonomialOrder local(std::vector<int> vars);

  bool is_global() const { return kind != Kind::LocalNegDegRevLex; }
  // strict a < b
  bool less(const Monomial& a, const Monomial& b) const;
};

struct IdealPresentation {
  std::vector<Polynomial> generators;  // nonzero
  std::vector<int> ambient_vars;

  // Drops zero generators; ambient variables must cover the generators.
  IdealPresentation(std::vector<Polynomial> gens, std::vector<int> vars);
  IdealPresentation() = default;
};

struct BasisOptions {
  std::size_t max_pairs = 1'000'000;
};

// Groebner basis (global order, Buchberger with chain/product criteria) or
// standard basis (local order, Mora weak normal form). Deterministic given
// the order. Throws ResourceLimitError if the pair queue exceeds max_pairs.
std::vector<Polynomial> standard_basis(const IdealPresentation& ideal,
                                       const MonomialOrder& order,
                                       const BasisOptions& opts = {});

// Normal form against a computed basis: reduced normal form for global
// orders, Mora weak normal form (zero iff member) for local orders.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

struct QuotientDimension {
  bool finite = false;
  long value = 0;                  // valid when finite
  std::vector<Monomial> staircase;  // standard monomials when finite
};

// dim_C of the local ring at the origin modulo the ideal.
QuotientDimension local_quotient_dim(const IdealPresentation& ideal,
                                     const BasisOptions& opts = {});

// dim_C of the affine coordinate ring modulo the ideal (solution count with
// multiplicity when finite).
QuotientDimension global_quotient_dim(const IdealPresentation& ideal,
                                      const BasisOptions& opts = {});

bool is_zero_dim_at_origin(const IdealPresentation& ideal, const BasisOptions& opts = {});

// true when the basis contains a nonzero constant (V(I) empty near 0).
bool basis_contains_unit(const std::vector<Polynomial>& basis);

}  // namespace germ
