#include <doctest.h>

#include "germ/poly_parser.hpp"
#include "germ/stabilisation.hpp"

using namespace germ;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

MapGerm make_germ(const std::string& name, int n, int p,
                  const std::vector<std::string>& vars,
                  const std::vector<std::string>& comps) {
  MapGerm f;
  f.name = name;
  f.n = n;
  f.p = p;
  for (std::size_t i = 0; i + 1 < vars.size(); ++i) f.x_vars.push_back(intern_variable(vars[i]));
  f.z_var = intern_variable(vars.back());
  for (auto& c : comps) f.components.push_back(P(c));
  f.validate();
  return f;
}

StabilisationFamily family(const MapGerm& base, const std::string& s,
                           const std::vector<std::string>& comps) {
  StabilisationFamily fam;
  fam.base = base;
  fam.s_var = intern_variable(s);
  for (auto& c : comps) fam.components.push_back(P(c));
  fam.validate();
  return fam;
}

MapGerm f4() { return make_germ("f4", 2, 3, {"x", "z"}, {"z^2", "z^5 + x^3*z"}); }

StabilisationFamily f4_family() {
  return family(f4(), "s", {"z^2", "z^5 + x*s*z^3 + x^3*z - 5*x*s*z - s*z"});
}

StabilisationFamily f4_family_alt() {
  return family(f4(), "s", {"z^2", "z^5 + s*z^3 + x^3*z - s*z"});
}

}  // namespace

TEST_CASE("family validation rejects wrong restrictions") {
  MapGerm f = f4();
  CHECK_NOTHROW(f4_family());
  CHECK_THROWS_AS(family(f, "s", {"z^2", "z^5 + s*z"}), InputError);
  CHECK_THROWS_AS(family(f, "s", {"z^2"}), InputError);
}

TEST_CASE("f4 double point curve equation matches up to scalar") {
  DoublePointCurve c = double_point_curve(f4_family());
  Polynomial expected = P("-s - 5*s*x + x^3 + s*x*z^2 + z^4");
  CHECK(c.lambda.primitive_part() == expected.primitive_part());
  // restriction to s = 0
  int s = intern_variable("s");
  CHECK(c.lambda.substitute({{s, Polynomial()}}).primitive_part() ==
        P("x^3 + z^4").primitive_part());
}

TEST_CASE("f4 raw critical count is nine") {
  CHECK(raw_critical_count(f4_family()) == 9);
}

TEST_CASE("raw count does not depend on the chosen family") {
  CHECK(raw_critical_count(f4_family()) == raw_critical_count(f4_family_alt()));
}

TEST_CASE("raw count equals mu(D2(f)) + mu(D2(g)) for f4") {
  // mu of the double point curve of f4 is 6, of its slice a4 is 3
  CHECK(raw_critical_count(f4_family()) == 6 + 3);
}

TEST_CASE("f4 typed counts") {
  TypedCounts t = typed_counts(f4_family(), f4(), 0);
  CHECK(t.cross_caps == 3);
  CHECK(t.tacnodes == 3);
  CHECK(t.triple_points == 0);
  CHECK(t.total == 6);
}

TEST_CASE("the cross cap is its own stabilisation") {
  MapGerm cc = make_germ("crosscap", 2, 3, {"x", "z"}, {"z^2", "x*z"});
  StabilisationFamily fam = family(cc, "s", {"z^2", "x*z"});
  DoublePointCurve c = double_point_curve(fam);
  CHECK(c.lambda.primitive_part() == P("x").primitive_part());
  CHECK(raw_critical_count(fam) == 1);
  TypedCounts t = typed_counts(fam, cc, 0);
  CHECK(t.cross_caps == 1);
  CHECK(t.tacnodes == 0);
  CHECK(t.triple_points == 0);
  CHECK(t.total == 1);
}

TEST_CASE("e6 curve counts from the shipped family") {
  MapGerm e6 = make_germ("e6", 1, 2, {"z"}, {"z^3", "z^4"});
  StabilisationFamily fam = family(e6, "s", {"z^3 + s*z", "z^4 + 5/4*s*z^2"});
  CurveCounts c = curve_counts(fam, e6, 0);
  CHECK(c.double_points == 3);
  CHECK(c.fold_count == 2);
  CHECK(c.total == 5);
}

TEST_CASE("typed counts agree with the verification lhs for f4") {
  TypedCounts t = typed_counts(f4_family(), f4(), 0);
  CHECK(t.total == 6);  // mu_I(f) + mu_I(g) = 4 + 2
}
