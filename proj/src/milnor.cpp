#include "germ/milnor.hpp"

#include <random>

namespace germ {

Polynomial generic_linear_form(const std::vector<int>& vars, long seed, int attempt) {
  std::seed_seq sq{static_cast<unsigned long>(seed), static_cast<unsigned long>(attempt),
                   0x9e3779b9ul};
  std::mt19937_64 rng(sq);
  std::uniform_int_distribution<int> dist(1, 17);
  std::bernoulli_distribution flip(0.5);
  Polynomial form;
  for (int v : vars) {
    int c = dist(rng);
    if (flip(rng)) c = -c;
    form += Polynomial::variable(v) * Rational(c);
  }
  return form;
}

namespace {

struct LevelResult {
  long dim;         // dim O/((g)+J(g,p)) for the chosen form
  Polynomial form;  // the chosen generic linear form
};

long le_greuel_dim(const IdealPresentation& ideal, const Polynomial& form,
                   const BasisOptions& opts, bool* finite) {
  std::vector<Polynomial> with_p = ideal.generators;
  with_p.push_back(form);
  std::vector<Polynomial> gens = ideal.generators;
  for (auto& m : jacobian_maximal_minors(with_p, ideal.ambient_vars)) gens.push_back(m);
  QuotientDimension q = local_quotient_dim(IdealPresentation(gens, ideal.ambient_vars), opts);
  *finite = q.finite;
  return q.finite ? q.value : -1;
}

// Draw three forms, take the minimum dimension; at least two draws must
// agree on it (semicontinuity: generic draws minimize), else retry.
LevelResult generic_level(const IdealPresentation& ideal, long seed, int level,
                          const BasisOptions& opts) {
  for (int round = 0; round < 5; ++round) {
    long best = -1;
    int best_count = 0;
    Polynomial best_form;
    for (int i = 0; i < 3; ++i) {
      Polynomial form =
          generic_linear_form(ideal.ambient_vars, seed, level * 64 + round * 8 + i);
      bool finite = false;
      long d = le_greuel_dim(ideal, form, opts, &finite);
      if (!finite) continue;
      if (best < 0 || d < best) {
        best = d;
        best_count = 1;
        best_form = form;
      } else if (d == best) {
        ++best_count;
      }
    }
    if (best >= 0 && best_count >= 2) return {best, best_form};
  }
  throw ComputationError("not an ICIS: no agreeing generic linear form after 5 rounds");
}

long milnor_rec(const IdealPresentation& ideal, int d, long seed, int level,
                const BasisOptions& opts) {
  if (d == 0) {
    QuotientDimension q = local_quotient_dim(ideal, opts);
    if (!q.finite) throw ComputationError("not an ICIS: zero-dimensional stage is not finite");
    if (q.value == 0)
      throw ComputationError("not an ICIS: empty zero-dimensional stage");
    return q.value - 1;  // mu = deg - 1
  }
  LevelResult lr = generic_level(ideal, seed, level, opts);
  IdealPresentation lower = ideal;
  lower.generators.push_back(lr.form);
  long mu_lower = milnor_rec(lower, d - 1, seed, level + 1, opts);
  long mu = lr.dim - mu_lower;
  if (mu < 0) throw ComputationError("not an ICIS: negative Milnor number in recursion");
  return mu;
}

}  // namespace

long milnor_number_icis(const IcisPresentation& X, long seed, const BasisOptions& opts) {
  int N = static_cast<int>(X.ideal.ambient_vars.size());
  int c = static_cast<int>(X.ideal.generators.size());
  if (c != N - X.expected_dim)
    throw InputError("milnor_number_icis: not a complete intersection presentation (" +
                     std::to_string(c) + " generators in C^" + std::to_string(N) +
                     " for dimension " + std::to_string(X.expected_dim) + ")");
  return milnor_rec(X.ideal, X.expected_dim, seed, 0, opts);
}

long milnor_number_hypersurface(const Polynomial& h, const std::vector<int>& vars,
                                const BasisOptions& opts) {
  if (h.constant_term() != 0) throw InputError("hypersurface germ must vanish at the origin");
  std::vector<Polynomial> jac;
  for (int v : vars) jac.push_back(h.derivative(v));
  QuotientDimension q = local_quotient_dim(IdealPresentation(jac, vars), opts);
  if (!q.finite) throw ComputationError("non-isolated singularity");
  return q.value;
}

}  // namespace germ
