#include <doctest.h>

#include <algorithm>

#include "germ/image_milnor.hpp"
#include "germ/poly_parser.hpp"

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

MapGerm cusp() { return make_germ("cusp", 1, 2, {"z"}, {"z^2", "z^3"}); }
MapGerm e6() { return make_germ("e6", 1, 2, {"z"}, {"z^3", "z^4"}); }
MapGerm f4() { return make_germ("f4", 2, 3, {"x", "z"}, {"z^2", "z^5 + x^3*z"}); }

MapGerm ak(int k) {
  return make_germ("a" + std::to_string(k), 1, 2, {"z"},
                   {"z^2", "z^" + std::to_string(2 * k + 1)});
}

const MararRow* find_row(const MararBreakdown& b, int k, const Partition& part) {
  for (auto& r : b.rows)
    if (r.k == k && r.part == part) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("cusp image Milnor number") {
  MararBreakdown b = image_milnor_number(cusp(), 0);
  CHECK(b.total == 1);
  const MararRow* r = find_row(b, 2, Partition{{1, 1}});
  REQUIRE(r != nullptr);
  CHECK_FALSE(r->empty);
  CHECK(r->expected_dim == 0);
  CHECK(r->mu_or_deg == 2);  // deg D^2 = 2
}

TEST_CASE("e6 image Milnor number and its breakdown") {
  MararBreakdown b = image_milnor_number(e6(), 0);
  CHECK(b.total == 3);
  const MararRow* r = find_row(b, 2, Partition{{1, 1}});
  REQUIRE(r != nullptr);
  CHECK(r->mu_or_deg == 6);  // deg D^2(e6) = 6
  CHECK(r->contribution == Rational(3));
  // (2) is an excluded stratum (expected dim -1) and contributes nothing
  const MararRow* ex = find_row(b, 2, Partition{{2}});
  if (ex != nullptr) CHECK(ex->empty);
}

TEST_CASE("f4 image Milnor number, exact per-partition contributions") {
  MararBreakdown b = image_milnor_number(f4(), 0);
  CHECK(b.total == 4);
  const MararRow* r11 = find_row(b, 2, Partition{{1, 1}});
  const MararRow* r2 = find_row(b, 2, Partition{{2}});
  REQUIRE(r11 != nullptr);
  REQUIRE(r2 != nullptr);
  CHECK(r11->mu_or_deg == 6);  // mu of the double point curve
  CHECK(r11->contribution == Rational(5, 2));
  CHECK(r2->mu_or_deg == 3);  // deg of the fat point, so mu = 2
  CHECK(r2->contribution == Rational(3, 2));
  for (auto& row : b.rows)
    if (row.k == 3) CHECK(row.empty);
}

TEST_CASE("a_k family: mu_I = k") {
  for (int k = 1; k <= 3; ++k) {
    MararBreakdown b = image_milnor_number(ak(k), 0);
    CHECK(b.total == k);
    // derived oracle: the only stratum is k=2,(1,1) with deg D^2 = 2k
    const MararRow* r = find_row(b, 2, Partition{{1, 1}});
    REQUIRE(r != nullptr);
    CHECK(r->mu_or_deg == 2 * k);
  }
}

TEST_CASE("crosscap has vanishing image Milnor number") {
  MapGerm cc = make_germ("crosscap", 2, 3, {"x", "z"}, {"z^2", "x*z"});
  CHECK(image_milnor_number(cc, 0).total == 0);
}

TEST_CASE("transverse slice of f4 is the plane A4 curve") {
  MapGerm f = f4();
  for (long seed : {0L, 1L, 2L}) {
    SliceResult s = transverse_slice(f, seed);
    CHECK(s.g.n == 1);
    CHECK(s.g.p == 2);
    REQUIRE(s.g.components.size() == 2);
    CHECK(s.g.components[0] == P("z^2"));
    CHECK(s.g.components[1] == P("z^5"));
    MararBreakdown b = image_milnor_number(s.g, seed);
    CHECK(b.total == 2);
  }
  CHECK_THROWS_AS(transverse_slice(e6(), 0), InputError);  // needs n >= 2
}

TEST_CASE("multiplicity and fold counts for curves") {
  CHECK(multiplicity_m0(e6()) == 3);
  CHECK(multiplicity_m0(cusp()) == 2);
  CHECK(fold_count_curve(e6(), 0) == 2);
  CHECK(fold_count_curve(cusp(), 0) == 1);
}

TEST_CASE("algebraic sigma counts") {
  SigmaCount s_e6 = algebraic_sigma_count(e6(), 0);
  CHECK(s_e6.total == 5);
  // 3 double points + 2 fold points
  Rational dp = 0, folds = 0;
  for (auto& r : s_e6.rows) {
    if (r.kind == "double-points") dp += r.contribution;
    if (r.kind == "folds") folds += r.contribution;
  }
  CHECK(dp == Rational(3));
  CHECK(folds == Rational(2));

  SigmaCount s_f4 = algebraic_sigma_count(f4(), 0);
  CHECK(s_f4.total == 6);
  std::vector<Rational> contribs;
  for (auto& r : s_f4.rows)
    if (r.kind != "empty" && r.kind != "excluded") contribs.push_back(r.contribution);
  REQUIRE(contribs.size() == 2);
  std::sort(contribs.begin(), contribs.end());
  CHECK(contribs[0] == Rational(3, 2));
  CHECK(contribs[1] == Rational(9, 2));

  CHECK(algebraic_sigma_count(cusp(), 0).total == 2);
  for (int k = 1; k <= 3; ++k) CHECK(algebraic_sigma_count(ak(k), 0).total == k + 1);
}

TEST_CASE("verification reports") {
  VerificationReport e = verify_le_greuel(e6(), 0);
  CHECK(e.determinacy_ok);
  CHECK(e.mu_image_f == 3);
  CHECK(e.m0 == 3);
  CHECK(e.lhs == 5);
  CHECK(e.rhs_algebraic == 5);
  CHECK(e.pass);

  VerificationReport f = verify_le_greuel(f4(), 0);
  CHECK(f.mu_image_f == 4);
  CHECK(f.mu_image_g == 2);
  CHECK(f.lhs == 6);
  CHECK(f.rhs_algebraic == 6);
  CHECK(f.pass);

  VerificationReport c = verify_le_greuel(cusp(), 0);
  CHECK(c.lhs == 2);
  CHECK(c.pass);

  MapGerm bad = make_germ("bad", 2, 3, {"x", "z"}, {"z^2", "0"});
  VerificationReport b = verify_le_greuel(bad, 0);
  CHECK_FALSE(b.determinacy_ok);
  CHECK_FALSE(b.pass);
}

TEST_CASE("totals are integers and seed stable") {
  for (long seed : {0L, 7L, 123L}) {
    CHECK(image_milnor_number(f4(), seed).total == 4);
    CHECK(algebraic_sigma_count(f4(), seed).total == 6);
    CHECK(image_milnor_number(e6(), seed).total == 3);
  }
}

TEST_CASE("source dimension 3 germ passes both routes") {
  MapGerm g = make_germ("s3", 3, 4, {"x1", "x2", "z"},
                        {"z^2", "z^3 + x1^2*z + x2^2*z"});
  VerificationReport rep = verify_le_greuel(g, 0);
  CHECK(rep.determinacy_ok);
  CHECK(rep.pass);
  CHECK(rep.lhs == rep.rhs_algebraic);
}
