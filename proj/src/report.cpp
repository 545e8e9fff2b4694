#include "germ/report.hpp"

#include "germ/poly_parser.hpp"

namespace germ {

using nlohmann::json;

json to_json(const Rational& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

json to_json(const MararBreakdown& b) {
  json rows = json::array();
  for (auto& r : b.rows) {
    rows.push_back(json{{"k", r.k},
                        {"partition", r.part.parts},
                        {"expected_dim", r.expected_dim},
                        {"empty", r.empty},
                        {"mu_or_deg", r.mu_or_deg},
                        {"beta", to_json(r.beta)},
                        {"contribution", to_json(r.contribution)}});
  }
  return json{{"total", b.total}, {"rows", rows}};
}

json to_json(const SigmaCount& s) {
  json rows = json::array();
  for (auto& r : s.rows) {
    rows.push_back(json{{"k", r.k},
                        {"partition", r.part.parts},
                        {"kind", r.kind},
                        {"contribution", to_json(r.contribution)}});
  }
  return json{{"total", s.total}, {"rows", rows}};
}

json to_json(const VerificationReport& r) {
  json j{{"germ", r.germ_name},
         {"n", r.n},
         {"determinacy_ok", r.determinacy_ok},
         {"violations", r.violations},
         {"mu_image", r.mu_image_f},
         {"lhs", r.lhs},
         {"rhs_algebraic", r.rhs_algebraic},
         {"pass", r.pass},
         {"marar", to_json(r.breakdown_f)},
         {"sigma", to_json(r.sigma)}};
  if (r.n == 1)
    j["m0"] = r.m0;
  else
    j["mu_image_slice"] = r.mu_image_g;
  if (r.rhs_numeric) j["rhs_numeric"] = *r.rhs_numeric;
  return j;
}

json to_json(const TypedCounts& t) {
  return json{{"cross_caps", t.cross_caps},
              {"tacnodes", t.tacnodes},
              {"triple_points", t.triple_points},
              {"total", t.total}};
}

json to_json(const CurveCounts& c) {
  return json{{"double_points", c.double_points},
              {"fold_count", c.fold_count},
              {"total", c.total}};
}

namespace {

void check_int(std::vector<CheckResult>& out, const std::string& label, long expected,
               long actual) {
  out.push_back({label, expected == actual,
                 "expected " + std::to_string(expected) + ", got " + std::to_string(actual)});
}

}  // namespace

std::vector<CheckResult> run_germ_checks(const GermSpec& spec, long seed,
                                         const BasisOptions& opts) {
  std::vector<CheckResult> out;
  MapGerm f = spec.to_map_germ();
  auto expects = [&](const char* key) { return spec.expect_ints.count(key) > 0; };
  auto expected = [&](const char* key) { return spec.expect_ints.at(key); };

  if (spec.expect_strings.count("determinacy")) {
    DeterminacyReport det = determinacy_dimension_check(f, seed, opts);
    bool want_ok = spec.expect_strings.at("determinacy") == "pass";
    out.push_back({spec.name + ": determinacy", det.ok == want_ok,
                   det.ok ? "finite-determinacy conditions hold"
                          : (det.violations.empty() ? "violated" : det.violations.front())});
    if (!det.ok) return out;  // remaining invariants are undefined
  }

  if (expects("mu_image"))
    check_int(out, spec.name + ": mu_image", expected("mu_image"),
              image_milnor_number(f, seed, opts).total);
  if (expects("mu_image_slice"))
    check_int(out, spec.name + ": mu_image_slice", expected("mu_image_slice"),
              image_milnor_number(transverse_slice(f, seed).g, seed, opts).total);
  if (expects("m0"))
    check_int(out, spec.name + ": m0", expected("m0"), multiplicity_m0(f));
  if (expects("sigma"))
    check_int(out, spec.name + ": sigma", expected("sigma"),
              algebraic_sigma_count(f, seed, opts).total);
  if (spec.expect_strings.count("verify")) {
    VerificationReport rep = verify_le_greuel(f, seed, opts);
    bool want = spec.expect_strings.at("verify") == "pass";
    out.push_back({spec.name + ": verify", rep.pass == want,
                   "lhs " + std::to_string(rep.lhs) + ", rhs " +
                       std::to_string(rep.rhs_algebraic)});
  }
  if (spec.has_stab()) {
    StabilisationFamily fam = spec.to_family();
    if (spec.expect_strings.count("lambda")) {
      std::set<std::string> allowed(spec.var_names.begin(), spec.var_names.end());
      allowed.insert(*spec.stab_param);
      Polynomial want = parse_polynomial(spec.expect_strings.at("lambda"), &allowed);
      Polynomial got = double_point_curve(fam).lambda;
      bool same = want.primitive_part() == got.primitive_part();
      out.push_back({spec.name + ": lambda", same, "resultant gives " + got.str()});
    }
    if (expects("raw_count"))
      check_int(out, spec.name + ": raw_count", expected("raw_count"),
                raw_critical_count(fam, opts));
    if (expects("cusps") || expects("tacnodes") || expects("triples")) {
      TypedCounts t = typed_counts(fam, f, seed, opts);
      if (expects("cusps")) check_int(out, spec.name + ": cusps", expected("cusps"), t.cross_caps);
      if (expects("tacnodes"))
        check_int(out, spec.name + ": tacnodes", expected("tacnodes"), t.tacnodes);
      if (expects("triples"))
        check_int(out, spec.name + ": triples", expected("triples"), t.triple_points);
    }
    if (expects("double_points") || expects("fold_count")) {
      CurveCounts c = curve_counts(fam, f, seed, opts);
      if (expects("double_points"))
        check_int(out, spec.name + ": double_points", expected("double_points"),
                  c.double_points);
      if (expects("fold_count"))
        check_int(out, spec.name + ": fold_count", expected("fold_count"), c.fold_count);
    }
  }
  return out;
}

}  // namespace germ
