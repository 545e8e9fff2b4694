#pragma once

#include <vector>

#include "germ/basis.hpp"
#include "germ/polynomial.hpp"

namespace germ {

// An ICIS presentation: V(generators) in C^N with expected dimension d,
// so the presentation has N - d generators.
struct IcisPresentation {
  IdealPresentation ideal;
  int expected_dim = 0;
};

// Deterministic pseudo-random linear form with small nonzero integer
// coefficients in [-17, 17].
Polynomial generic_linear_form(const std::vector<int>& vars, long seed, int attempt);

// Milnor number of an ICIS by the Le-Greuel recursion:
//   mu(X_d) = dim O/((g) + J(g, p)) - mu(X_{d-1}),  X_{d-1} = V(g, p),
// descending to the zero-dimensional base case mu = deg - 1.
// Generic forms are drawn three times per level; the minimum dimension must
// be attained at least twice, else fresh draws are taken (up to 5 rounds).
long milnor_number_icis(const IcisPresentation& X, long seed, const BasisOptions& opts = {});

// Independent cross-check for hypersurfaces: dim of the Jacobian-ideal
// quotient. Throws ComputationError("non-isolated") when infinite.
long milnor_number_hypersurface(const Polynomial& h, const std::vector<int>& vars,
                                const BasisOptions& opts = {});

}  // namespace germ
