#pragma once

#include "germ/image_milnor.hpp"
#include "germ/multiple_points.hpp"

namespace germ {

// An explicit stabilisation family: components in (x, z, s) restricting to
// the base germ at s = 0. Families are user-supplied; the engine validates
// the restriction but never synthesizes one.
struct StabilisationFamily {
  MapGerm base;
  int s_var = -1;
  std::vector<Polynomial> components;

  void validate() const;  // throws InputError if s=0 does not recover base
};

struct DoublePointCurve {
  Polynomial lambda;  // Res_{z2}(P_s, Q_s), in (x, z) and s when symbolic
  Polynomial P_s, Q_s;
};

// The defining equation of the projected double point curve D(f_s), computed
// as the resultant of the two divided differences with respect to z2.
DoublePointCurve double_point_curve(const StabilisationFamily& family);

// Number of critical points of p~|D(f_s) converging to the origin as s -> 0:
// the local intersection multiplicity of (lambda_0, J(lambda_0, p~)) at the
// origin. Requires n = 2.
long raw_critical_count(const StabilisationFamily& family, const BasisOptions& opts = {});

struct TypedCounts {
  long cross_caps = 0;   // C
  long tacnodes = 0;     // J
  long triple_points = 0;  // T
  long total = 0;
};

// Per-stable-type split for n = 2: C from deg D^2(f,(2)), T from
// deg D^3(f,(1,1,1))/6, tacnodes from the remaining critical points two at a
// time. Unsupported when T != 0.
TypedCounts typed_counts(const StabilisationFamily& family, const MapGerm& f, long seed,
                         const BasisOptions& opts = {});

struct CurveCounts {
  long double_points = 0;
  long fold_count = 0;
  long total = 0;
};

// n = 1 decomposition: deg(D^2(f))/2 transverse double points plus
// mu(p o f) = m0(f) - 1 fold points.
CurveCounts curve_counts(const StabilisationFamily& family, const MapGerm& f, long seed,
                         const BasisOptions& opts = {});

}  // namespace germ
