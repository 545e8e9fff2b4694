#include <doctest.h>

#include <random>

#include "germ/milnor.hpp"
#include "germ/poly_parser.hpp"

using namespace germ;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

std::vector<int> V(std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (auto* n : names) out.push_back(intern_variable(n));
  return out;
}

}  // namespace

TEST_CASE("generic linear forms are deterministic and full support") {
  auto vars = V({"x", "y", "z"});
  Polynomial a = generic_linear_form(vars, 5, 0);
  CHECK(a == generic_linear_form(vars, 5, 0));
  CHECK(a.total_degree() == 1);
  for (int v : vars) CHECK(a.degree_in(v) == 1);
  CHECK_FALSE(a == generic_linear_form(vars, 5, 1));
}

TEST_CASE("Brieskorn plane curves: recursion equals (a-1)(b-1)") {
  auto vars = V({"x", "z"});
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {2, 5}, {4, 5}}) {
    Polynomial h = Polynomial::variable(vars[1]).pow(a) + Polynomial::variable(vars[0]).pow(b);
    IcisPresentation X{IdealPresentation({h}, vars), 1};
    long via_recursion = milnor_number_icis(X, 0);
    long via_jacobian = milnor_number_hypersurface(h, vars);
    CHECK(via_recursion == (a - 1) * (b - 1));
    CHECK(via_jacobian == (a - 1) * (b - 1));
  }
}

TEST_CASE("recursion agrees with the Jacobian oracle on random plane curves") {
  auto vars = V({"x", "z"});
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coef(-4, 4), e(1, 4);
  int done = 0;
  for (int trial = 0; done < 12 && trial < 60; ++trial) {
    Polynomial h = P("x^5 + z^5");  // dominating terms keep mu finite
    for (int t = 0; t < 3; ++t) {
      int c = coef(rng);
      if (c != 0)
        h.add_term(c, Monomial::variable(vars[0], e(rng)) * Monomial::variable(vars[1], e(rng)));
    }
    long oracle;
    try {
      oracle = milnor_number_hypersurface(h, vars);
    } catch (const ComputationError&) {
      continue;  // non-isolated draw
    }
    if (h.order() < 2) continue;  // smooth or empty, recursion base differs
    IcisPresentation X{IdealPresentation({h}, vars), 1};
    CHECK(milnor_number_icis(X, 0) == oracle);
    ++done;
  }
  CHECK(done >= 12);
}

TEST_CASE("zero dimensional base case: mu = deg - 1") {
  auto vars = V({"x", "z"});
  IcisPresentation X{IdealPresentation({P("x^2"), P("z^3")}, vars), 0};
  CHECK(milnor_number_icis(X, 0) == 5);
  IcisPresentation smooth{IdealPresentation({P("x"), P("z")}, vars), 0};
  CHECK(milnor_number_icis(smooth, 0) == 0);
}

TEST_CASE("fat points cut from A_k double point ideals") {
  // eliminating v = -u from (u + v, sum u^i v^(2k-i)) leaves u^(2k)
  auto vars = V({"u", "v"});
  for (int k = 1; k <= 3; ++k) {
    Polynomial sum;
    for (int i = 0; i <= 2 * k; ++i)
      sum += Polynomial::variable(vars[0]).pow(i) * Polynomial::variable(vars[1]).pow(2 * k - i);
    IcisPresentation X{IdealPresentation({P("u + v"), sum}, vars), 0};
    Polynomial restricted = sum.substitute({{vars[1], -Polynomial::variable(vars[0])}});
    CHECK(restricted == Polynomial::variable(vars[0]).pow(2 * k));
    CHECK(milnor_number_icis(X, 0) == 2 * k - 1);
  }
}

TEST_CASE("curve ICIS in 3-space") {
  auto vars = V({"u", "v", "w"});
  // V(u + v, u^2 + uv + v^2 + w^3): substituting v = -u gives the plane curve
  // u^2 + w^3, an ordinary cusp with mu = 2
  IcisPresentation X{IdealPresentation({P("u + v"), P("u^2 + u*v + v^2 + w^3")}, vars), 1};
  CHECK(milnor_number_icis(X, 0) == 2);
  CHECK(milnor_number_hypersurface(P("u^2 + w^3"), V({"u", "w"})) == 2);
}

TEST_CASE("seed independence") {
  auto vars = V({"x", "z"});
  IcisPresentation X{IdealPresentation({P("z^4 + x^3")}, vars), 1};
  long ref = milnor_number_icis(X, 0);
  CHECK(ref == 6);
  for (long seed : {1L, 2L, 99L}) CHECK(milnor_number_icis(X, seed) == ref);
}

TEST_CASE("input validation and degenerate inputs") {
  auto vars = V({"x", "z"});
  // wrong number of generators for the claimed dimension
  IcisPresentation bad{IdealPresentation({P("x*z")}, vars), 0};
  CHECK_THROWS_AS(milnor_number_icis(bad, 0), Error);
  // non-isolated hypersurface singularity
  CHECK_THROWS_AS(milnor_number_hypersurface(P("x^2*z^2"), vars), ComputationError);
}
