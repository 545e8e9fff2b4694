#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germ/milnor.hpp"
#include "germ/multiple_points.hpp"

namespace germ {

struct SliceResult {
  MapGerm g;        // the transverse slice, source dimension n-1
  Polynomial form;  // the generic linear form in the unfolding variables
};

// Draws a generic linear form in the unfolding coordinates, changes source
// coordinates so the form becomes x1, and sets x1 = 0 in the last two
// components. Requires n >= 2.
SliceResult transverse_slice(const MapGerm& f, long seed);

// f rewritten in the sliced coordinates (the drawn form becomes x1); used by
// the sigma count so that "projection onto the first coordinate" is generic.
MapGerm sliced_coordinates(const MapGerm& f, long seed);

struct MararRow {
  int k = 0;
  Partition part;
  int expected_dim = 0;
  bool empty = false;      // D^k(f,P) empty (or excluded stratum)
  long mu_or_deg = 0;      // mu when expected_dim > 0, deg when == 0
  Rational beta;
  Rational contribution;
};

struct MararBreakdown {
  std::vector<MararRow> rows;
  long total = 0;  // mu_I(f)
};

// The strong Marar formula:
//   mu_I(f) = sum_{k=2}^{n+1} (-1)^{n-k+1} sum_{|P|=k}
//             beta(P) (1 + (-1)^{dim D^k(f,P)} mu(D^k(f,P))),
// with beta(P) = 0 for empty strata. The total must be a non-negative
// integer although individual contributions are proper rationals.
MararBreakdown image_milnor_number(const MapGerm& f, long seed, const BasisOptions& opts = {});

// Multiplicity of a parametrized curve (n = 1): minimum vanishing order.
int multiplicity_m0(const MapGerm& f);

// Number of critical points of a generic p o f near the origin (n = 1);
// equals m0(f) - 1.
long fold_count_curve(const MapGerm& f, long seed, const BasisOptions& opts = {});

struct SigmaRow {
  int k = 0;
  Partition part;
  std::string kind;  // "points", "morse", "double-points", "folds", "empty", "excluded"
  Rational contribution;
};

struct SigmaCount {
  std::vector<SigmaRow> rows;
  long total = 0;  // #Sigma(p|X_s)
};

// The algebraic count of critical points of p|X_s:
//   zero-dimensional strata contribute deg(D^k(f,P)) / cov(P),
//   positive-dimensional strata contribute
//     dim O/(I_k(f,P) + J(gens, p~)) / cov(P)
// with p~ the first coordinate after the slice change. For n = 1 it is
// deg(D^2(f))/2 double points plus mu(p o f) fold points.
SigmaCount algebraic_sigma_count(const MapGerm& f, long seed, const BasisOptions& opts = {});

struct VerificationReport {
  std::string germ_name;
  int n = 1;
  bool determinacy_ok = true;
  std::vector<std::string> violations;
  long mu_image_f = 0;
  long mu_image_g = 0;  // n >= 2 only
  long m0 = 0;          // n == 1 only
  long lhs = 0;
  long rhs_algebraic = 0;
  std::optional<long> rhs_numeric;  // filled by the stabilisation route
  MararBreakdown breakdown_f;
  SigmaCount sigma;
  bool pass = false;
};

// Verifies mu_I(f) + mu_I(g) = #Sigma (n > 1) or
// mu_I(f) + m0(f) - 1 = #Sigma (n = 1) by the two computation routes.
VerificationReport verify_le_greuel(const MapGerm& f, long seed, const BasisOptions& opts = {});

}  // namespace germ
