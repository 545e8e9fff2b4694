#include "germ/stabilisation.hpp"

namespace germ {

void StabilisationFamily::validate() const {
  base.validate();
  if (components.size() != base.components.size())
    throw InputError(base.name + ": stabilisation must have " +
                     std::to_string(base.components.size()) + " components");
  for (std::size_t i = 0; i < components.size(); ++i) {
    Polynomial at0 = components[i].substitute({{s_var, Polynomial()}});
    if (!(at0 == base.components[i]))
      throw InputError(base.name + ": stabilisation component " + std::to_string(i + 1) +
                       " does not restrict to the base germ at s=0");
  }
}

DoublePointCurve double_point_curve(const StabilisationFamily& family) {
  const MapGerm& f = family.base;
  if (f.p - f.n != 1 || family.components.size() != 2)
    throw InputError("double_point_curve: recipe needs two non-trivial components");
  std::vector<int> zs = multiple_point_z_vars(f, 2);
  DoublePointCurve out;
  out.P_s = divided_difference(family.components[0], f.z_var, zs[0], zs[1]);
  out.Q_s = divided_difference(family.components[1], f.z_var, zs[0], zs[1]);
  Polynomial res = resultant_allow_constant(out.P_s, out.Q_s, zs[1]);
  out.lambda = res.substitute({{zs[0], Polynomial::variable(f.z_var)}});
  return out;
}

long raw_critical_count(const StabilisationFamily& family, const BasisOptions& opts) {
  const MapGerm& f = family.base;
  if (f.n != 2) throw InputError("raw_critical_count: requires n = 2");
  DoublePointCurve curve = double_point_curve(family);
  Polynomial lambda0 = curve.lambda.substitute({{family.s_var, Polynomial()}});
  std::vector<int> vars = f.source_vars();  // (x, z)
  Polynomial p_tilde = Polynomial::variable(f.x_vars[0]);
  Polynomial jac = jacobian_maximal_minors({lambda0, p_tilde}, vars)[0];
  std::vector<Polynomial> sys{lambda0, jac};
  if (jac.is_zero()) {
    // The double locus is a union of vertical lines; every point is a
    // degenerate critical point of p~. Count the locus against the z = 0
    // slice instead (multiplicity of the 0-stratum).
    sys = {lambda0, Polynomial::variable(f.z_var)};
  }
  QuotientDimension q = local_quotient_dim(IdealPresentation(sys, vars), opts);
  if (!q.finite) throw ComputationError("raw_critical_count: non-isolated critical locus");
  return q.value;
}

TypedCounts typed_counts(const StabilisationFamily& family, const MapGerm& f, long seed,
                         const BasisOptions& opts) {
  if (f.n != 2) throw InputError("typed_counts: requires n = 2");
  TypedCounts out;

  QuotientDimension qc = local_quotient_dim(ideal_IkP(f, 2, Partition{{2}}), opts);
  if (!qc.finite) throw ComputationError("typed_counts: D^2(f,(2)) not zero-dimensional");
  out.cross_caps = qc.value;

  IdealPresentation triple = ideal_IkP(f, 3, Partition{{1, 1, 1}});
  auto basis = standard_basis(triple, MonomialOrder::local(triple.ambient_vars), opts);
  if (!basis_contains_unit(basis)) {
    QuotientDimension qt = local_quotient_dim(triple, opts);
    if (!qt.finite) throw ComputationError("typed_counts: D^3(f) not zero-dimensional");
    if (qt.value % 6 != 0)
      throw ComputationError("typed_counts: deg D^3 not divisible by the covering degree 6");
    out.triple_points = qt.value / 6;
  }
  if (out.triple_points != 0)
    throw ComputationError("triple points present - typed split unsupported");

  long raw = raw_critical_count(family, opts);
  long rest = raw - out.cross_caps;
  if (rest < 0 || rest % 2 != 0)
    throw ComputationError("typed_counts: tacnode residue " + std::to_string(rest) +
                           " is not an even non-negative count");
  out.tacnodes = rest / 2;
  out.total = out.cross_caps + out.tacnodes + out.triple_points;

  // consistency with the algebraic route, when that route is non-degenerate
  try {
    SigmaCount sigma = algebraic_sigma_count(f, seed, opts);
    if (sigma.total != out.total)
      throw ComputationError("typed_counts: total " + std::to_string(out.total) +
                             " disagrees with the algebraic count " +
                             std::to_string(sigma.total));
  } catch (const ComputationError& e) {
    if (std::string(e.what()).find("degenerate projection") == std::string::npos) throw;
  }
  return out;
}

CurveCounts curve_counts(const StabilisationFamily& family, const MapGerm& f, long seed,
                         const BasisOptions& opts) {
  if (f.n != 1) throw InputError("curve_counts: requires n = 1");
  family.validate();
  CurveCounts out;
  QuotientDimension q = local_quotient_dim(ideal_Ik(f, 2), opts);
  if (!q.finite) throw ComputationError("curve_counts: D^2(f) not zero-dimensional");
  if (q.value % 2 != 0)
    throw ComputationError("curve_counts: deg D^2(f) is odd");
  out.double_points = q.value / 2;
  out.fold_count = fold_count_curve(f, seed, opts);
  out.total = out.double_points + out.fold_count;
  return out;
}

}  // namespace germ
