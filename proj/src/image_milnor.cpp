#include "germ/image_milnor.hpp"

#include <algorithm>
#include <climits>

namespace germ {

namespace {

// Substitution sending x1 to its expression in the sliced coordinates.
std::map<int, Polynomial> slice_substitution(const MapGerm& f, const Polynomial& form) {
  // form = c1*x1 + c2*x2 + ... ; new first coordinate is the form itself,
  // so x1 = (x1' - sum_{i>=2} c_i x_i') / c1 with the old names reused.
  Rational c1;
  for (auto& [m, c] : form.terms())
    if (m.exponent(f.x_vars[0]) == 1) c1 = c;
  if (c1 == 0) throw ComputationError("transverse_slice: drawn form misses x1");
  Polynomial expr = Polynomial::variable(f.x_vars[0]);
  for (std::size_t i = 1; i < f.x_vars.size(); ++i) {
    Rational ci;
    for (auto& [m, c] : form.terms())
      if (m.exponent(f.x_vars[i]) == 1) ci = c;
    expr -= Polynomial::variable(f.x_vars[i]) * ci;
  }
  return {{f.x_vars[0], expr * (1 / c1)}};
}

long rational_to_integer_total(const Rational& q, const char* what) {
  if (q.get_den() != 1)
    throw ComputationError(std::string(what) + ": non-integer total " + to_string(q));
  if (!q.get_num().fits_slong_p())
    throw ComputationError(std::string(what) + ": total out of range");
  return q.get_num().get_si();
}

}  // namespace

MapGerm sliced_coordinates(const MapGerm& f, long seed) {
  if (f.n < 2) throw InputError("sliced_coordinates: requires n >= 2");
  Polynomial form = generic_linear_form(f.x_vars, seed, 0);
  auto sub = slice_substitution(f, form);
  MapGerm ft = f;
  ft.name = f.name + "~";
  for (auto& h : ft.components) h = h.substitute(sub);
  return ft;
}

SliceResult transverse_slice(const MapGerm& f, long seed) {
  if (f.n < 2) throw InputError("transverse_slice: requires n >= 2");
  Polynomial form = generic_linear_form(f.x_vars, seed, 0);
  auto sub = slice_substitution(f, form);
  // after the change, set the new x1 to zero
  sub[f.x_vars[0]] = sub[f.x_vars[0]].substitute({{f.x_vars[0], Polynomial()}});
  MapGerm g;
  g.name = f.name + ".slice";
  g.n = f.n - 1;
  g.p = f.p - 1;
  g.x_vars.assign(f.x_vars.begin() + 1, f.x_vars.end());
  g.z_var = f.z_var;
  for (auto& h : f.components) g.components.push_back(h.substitute(sub));
  g.validate();
  return {std::move(g), std::move(form)};
}

MararBreakdown image_milnor_number(const MapGerm& f, long seed, const BasisOptions& opts) {
  MararBreakdown out;
  Rational total;
  for (int k = 2; k <= f.n + 1; ++k) {
    int sgn = ((f.n - k + 1) % 2 == 0) ? 1 : -1;
    for (const Partition& part : partitions_of(k)) {
      MararRow row;
      row.k = k;
      row.part = part;
      row.expected_dim = expected_dim_P(f, k, part);
      PartitionStats st = partition_stats(part);
      row.beta = st.beta;

      IdealPresentation ideal = ideal_IkP(f, k, part);
      MonomialOrder ord = MonomialOrder::local(ideal.ambient_vars);
      auto basis = standard_basis(ideal, ord, opts);
      if (basis_contains_unit(basis)) {
        row.empty = true;  // beta(P) = 0 for empty strata
        out.rows.push_back(row);
        continue;
      }
      if (row.expected_dim < 0) {
        // at most the origin; excluded from the sum
        row.empty = true;
        out.rows.push_back(row);
        continue;
      }
      if (row.expected_dim == 0) {
        QuotientDimension q = local_quotient_dim(ideal, opts);
        if (!q.finite)
          throw ComputationError("D^" + std::to_string(k) + "(f," + part.str() +
                                 ") is not zero-dimensional at the origin");
        row.mu_or_deg = q.value;  // deg; mu = deg - 1 and 1 + mu = deg
        row.contribution = Rational(sgn) * st.beta * Rational(q.value);
      } else {
        long mu = milnor_number_icis({ideal, row.expected_dim}, seed, opts);
        row.mu_or_deg = mu;
        int dim_sign = (row.expected_dim % 2 == 0) ? 1 : -1;
        row.contribution = Rational(sgn) * st.beta * (Rational(1) + Rational(dim_sign * mu));
      }
      total += row.contribution;
      out.rows.push_back(row);
    }
  }
  out.total = rational_to_integer_total(total, "image_milnor_number");
  if (out.total < 0) throw ComputationError("image_milnor_number: negative total");
  return out;
}

int multiplicity_m0(const MapGerm& f) {
  if (f.n != 1) throw InputError("multiplicity_m0: requires n = 1");
  int m0 = INT_MAX;
  for (auto& h : f.components) m0 = std::min(m0, h.order());
  if (m0 == INT_MAX) throw InputError("multiplicity_m0: zero germ");
  return m0;
}

long fold_count_curve(const MapGerm& f, long seed, const BasisOptions& opts) {
  if (f.n != 1) throw InputError("fold_count_curve: requires n = 1");
  std::vector<int> zv{f.z_var};
  // mu(p o f) for generic p, with the usual 3-draw agreement
  for (int round = 0; round < 5; ++round) {
    long best = -1;
    int best_count = 0;
    for (int i = 0; i < 3; ++i) {
      // coefficients for p(y1, y2) = A y1 + B y2
      Polynomial a = generic_linear_form(zv, seed, round * 8 + 2 * i + 2048);
      Polynomial b = generic_linear_form(zv, seed, round * 8 + 2 * i + 2049);
      Rational A = a.terms().begin()->second, B = b.terms().begin()->second;
      Polynomial pf = f.components[0] * A + f.components[1] * B;
      QuotientDimension q =
          local_quotient_dim(IdealPresentation({pf.derivative(f.z_var)}, zv), opts);
      if (!q.finite) continue;
      if (best < 0 || q.value < best) {
        best = q.value;
        best_count = 1;
      } else if (q.value == best) {
        ++best_count;
      }
    }
    if (best >= 0 && best_count >= 2) return best;
  }
  throw ComputationError("fold_count_curve: no agreeing generic projection");
}

SigmaCount algebraic_sigma_count(const MapGerm& f, long seed, const BasisOptions& opts) {
  SigmaCount out;
  Rational total;
  if (f.n == 1) {
    QuotientDimension q = local_quotient_dim(ideal_Ik(f, 2), opts);
    if (!q.finite)
      throw ComputationError("algebraic_sigma_count: D^2(f) not finite at the origin");
    SigmaRow dbl{2, Partition{{1, 1}}, "double-points", Rational(q.value, 2)};
    dbl.contribution.canonicalize();
    total += dbl.contribution;
    out.rows.push_back(dbl);
    long folds = fold_count_curve(f, seed, opts);
    SigmaRow fold{1, Partition{{1}}, "folds", Rational(folds)};
    total += fold.contribution;
    out.rows.push_back(fold);
    out.total = rational_to_integer_total(total, "algebraic_sigma_count");
    return out;
  }

  MapGerm ft = sliced_coordinates(f, seed);
  int p_tilde = ft.x_vars[0];
  for (int k = 2; k <= ft.n + 1; ++k) {
    for (const Partition& part : partitions_of(k)) {
      SigmaRow row;
      row.k = k;
      row.part = part;
      PartitionStats st = partition_stats(part);
      int e = expected_dim_P(ft, k, part);

      IdealPresentation ideal = ideal_IkP(ft, k, part);
      MonomialOrder ord = MonomialOrder::local(ideal.ambient_vars);
      auto basis = standard_basis(ideal, ord, opts);
      if (basis_contains_unit(basis)) {
        row.kind = "empty";
        out.rows.push_back(row);
        continue;
      }
      if (e < 0) {
        row.kind = "excluded";
        out.rows.push_back(row);
        continue;
      }
      if (e == 0) {
        QuotientDimension q = local_quotient_dim(ideal, opts);
        if (!q.finite)
          throw ComputationError("algebraic_sigma_count: D^" + std::to_string(k) + "(f," +
                                 part.str() + ") not zero-dimensional");
        row.kind = "points";
        row.contribution = Rational(q.value, st.covering_degree);
      } else {
        // Le-Greuel on the stratum: mu(D^k(f,P)) + mu(D^k(g,P)) =
        // dim O/(I_k(f,P) + J(gens, p~))
        std::vector<Polynomial> with_p = ideal.generators;
        with_p.push_back(Polynomial::variable(p_tilde));
        std::vector<Polynomial> gens = ideal.generators;
        for (auto& mnr : jacobian_maximal_minors(with_p, ideal.ambient_vars))
          gens.push_back(mnr);
        QuotientDimension q =
            local_quotient_dim(IdealPresentation(gens, ideal.ambient_vars), opts);
        if (!q.finite)
          throw ComputationError("algebraic_sigma_count: degenerate projection on D^" +
                                 std::to_string(k) + "(f," + part.str() + ")");
        row.kind = "morse";
        row.contribution = Rational(q.value, st.covering_degree);
      }
      row.contribution.canonicalize();
      total += row.contribution;
      out.rows.push_back(row);
    }
  }
  out.total = rational_to_integer_total(total, "algebraic_sigma_count");
  return out;
}

VerificationReport verify_le_greuel(const MapGerm& f, long seed, const BasisOptions& opts) {
  VerificationReport rep;
  rep.germ_name = f.name;
  rep.n = f.n;
  DeterminacyReport det = determinacy_dimension_check(f, seed, opts);
  rep.determinacy_ok = det.ok;
  rep.violations = det.violations;
  if (!det.ok) return rep;  // pass stays false

  rep.breakdown_f = image_milnor_number(f, seed, opts);
  rep.mu_image_f = rep.breakdown_f.total;
  if (f.n == 1) {
    rep.m0 = multiplicity_m0(f);
    rep.lhs = rep.mu_image_f + rep.m0 - 1;
  } else {
    SliceResult slice = transverse_slice(f, seed);
    rep.mu_image_g = image_milnor_number(slice.g, seed, opts).total;
    rep.lhs = rep.mu_image_f + rep.mu_image_g;
  }
  rep.sigma = algebraic_sigma_count(f, seed, opts);
  rep.rhs_algebraic = rep.sigma.total;
  rep.pass = (rep.lhs == rep.rhs_algebraic);
  return rep;
}

}  // namespace germ
