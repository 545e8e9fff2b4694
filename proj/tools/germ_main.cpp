#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "germ/report.hpp"

namespace fs = std::filesystem;
using namespace germ;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;

struct GlobalOpts {
  long seed = 0;
  bool json = false;
  std::size_t max_pairs = 1'000'000;
  BasisOptions basis() const { return BasisOptions{max_pairs}; }
};

void print_breakdown(const MararBreakdown& b) {
  for (auto& r : b.rows) {
    std::cout << "  k=" << r.k << " P=" << r.part.str();
    if (r.empty) {
      std::cout << "  empty (contribution 0)\n";
    } else {
      std::cout << "  dim=" << r.expected_dim
                << (r.expected_dim > 0 ? " mu=" : " deg=") << r.mu_or_deg
                << " beta=" << to_string(r.beta)
                << " contribution=" << to_string(r.contribution) << "\n";
    }
  }
  std::cout << "  mu_I = " << b.total << "\n";
}

void print_sigma(const SigmaCount& s) {
  for (auto& r : s.rows) {
    std::cout << "  k=" << r.k << " P=" << r.part.str() << "  " << r.kind;
    if (r.kind != "empty" && r.kind != "excluded")
      std::cout << "  contribution=" << to_string(r.contribution);
    std::cout << "\n";
  }
  std::cout << "  #Sigma = " << s.total << "\n";
}

int cmd_mps(const std::string& path, int k, const std::string& partition_arg,
            const GlobalOpts& g) {
  GermSpec spec = load_germ_spec(path);
  MapGerm f = spec.to_map_germ();
  IdealPresentation ideal;
  int edim;
  if (partition_arg.empty()) {
    ideal = ideal_Ik(f, k);
    edim = expected_dim(f, k);
  } else {
    Partition part;
    std::stringstream ss(partition_arg);
    std::string item;
    while (std::getline(ss, item, ',')) part.parts.push_back(std::stoi(item));
    ideal = ideal_IkP(f, k, part);
    edim = expected_dim_P(f, k, part);
  }
  if (g.json) {
    nlohmann::json j;
    j["germ"] = f.name;
    j["k"] = k;
    j["expected_dim"] = edim;
    j["generators"] = nlohmann::json::array();
    for (auto& gen : ideal.generators) j["generators"].push_back(gen.str());
    j["ambient_vars"] = nlohmann::json::array();
    for (int v : ideal.ambient_vars) j["ambient_vars"].push_back(variable_name(v));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "I_" << k << "(" << f.name << (partition_arg.empty() ? "" : "," + partition_arg)
              << ") in C^" << ideal.ambient_vars.size() << ", expected dim " << edim << ":\n";
    for (auto& gen : ideal.generators) std::cout << "  " << gen.str() << "\n";
  }
  return kExitPass;
}

int cmd_mu_image(const std::string& path, const GlobalOpts& g) {
  GermSpec spec = load_germ_spec(path);
  MapGerm f = spec.to_map_germ();
  MararBreakdown b = image_milnor_number(f, g.seed, g.basis());
  if (g.json) {
    nlohmann::json j = to_json(b);
    j["germ"] = f.name;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "image Milnor number of " << f.name << ":\n";
    print_breakdown(b);
  }
  return kExitPass;
}

int cmd_slice(const std::string& path, const GlobalOpts& g) {
  GermSpec spec = load_germ_spec(path);
  MapGerm f = spec.to_map_germ();
  SliceResult s = transverse_slice(f, g.seed);
  if (g.json) {
    nlohmann::json j;
    j["germ"] = f.name;
    j["form"] = s.form.str();
    j["slice"] = nlohmann::json::array();
    for (auto& h : s.g.components) j["slice"].push_back(h.str());
    j["n"] = s.g.n;
    j["p"] = s.g.p;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "transverse slice of " << f.name << " w.r.t. " << s.form.str() << ":\n  g(";
    auto vars = s.g.source_vars();
    for (std::size_t i = 0; i < vars.size(); ++i)
      std::cout << (i ? ", " : "") << variable_name(vars[i]);
    std::cout << ") = (";
    bool first = true;
    for (int v : s.g.x_vars) {
      std::cout << (first ? "" : ", ") << variable_name(v);
      first = false;
    }
    for (auto& h : s.g.components) {
      std::cout << (first ? "" : ", ") << h.str();
      first = false;
    }
    std::cout << ")\n";
  }
  return kExitPass;
}

int cmd_verify(const std::string& path, const GlobalOpts& g) {
  GermSpec spec = load_germ_spec(path);
  MapGerm f = spec.to_map_germ();
  VerificationReport rep = verify_le_greuel(f, g.seed, g.basis());
  if (rep.determinacy_ok && spec.has_stab()) {
    try {
      StabilisationFamily fam = spec.to_family();
      if (f.n == 1)
        rep.rhs_numeric = curve_counts(fam, f, g.seed, g.basis()).total;
      else if (f.n == 2)
        rep.rhs_numeric = typed_counts(fam, f, g.seed, g.basis()).total;
      if (rep.rhs_numeric) rep.pass = rep.pass && (*rep.rhs_numeric == rep.lhs);
    } catch (const ComputationError&) {
      // typed split unsupported or degenerate; the algebraic route stands
    }
  }
  if (g.json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << "verification for " << f.name << " (n=" << f.n << "):\n";
    if (!rep.determinacy_ok) {
      for (auto& v : rep.violations) std::cout << "  " << v << "\n";
      std::cout << "  FAIL (not finitely determined)\n";
      return kExitVerifyFail;
    }
    print_breakdown(rep.breakdown_f);
    if (f.n == 1)
      std::cout << "  m0 = " << rep.m0 << ", lhs = mu_I + m0 - 1 = " << rep.lhs << "\n";
    else
      std::cout << "  mu_I(g) = " << rep.mu_image_g << ", lhs = mu_I(f) + mu_I(g) = "
                << rep.lhs << "\n";
    print_sigma(rep.sigma);
    if (rep.rhs_numeric)
      std::cout << "  stabilisation route: " << *rep.rhs_numeric << "\n";
    std::cout << "  " << (rep.pass ? "PASS" : "FAIL") << ": lhs " << rep.lhs << " vs rhs "
              << rep.rhs_algebraic << "\n";
  }
  return rep.pass ? kExitPass : kExitVerifyFail;
}

int cmd_stab(const std::string& path, const GlobalOpts& g) {
  GermSpec spec = load_germ_spec(path);
  if (!spec.has_stab()) throw InputError(spec.name + ": no stabilisation block in spec");
  MapGerm f = spec.to_map_germ();
  StabilisationFamily fam = spec.to_family();
  nlohmann::json j;
  j["germ"] = f.name;
  if (f.n == 1) {
    CurveCounts c = curve_counts(fam, f, g.seed, g.basis());
    j["counts"] = to_json(c);
    if (!g.json)
      std::cout << f.name << ": double points " << c.double_points << ", fold points "
                << c.fold_count << ", #Sigma = " << c.total << "\n";
  } else {
    DoublePointCurve curve = double_point_curve(fam);
    j["lambda"] = curve.lambda.str();
    long raw = raw_critical_count(fam, g.basis());
    j["raw_count"] = raw;
    if (!g.json) {
      std::cout << f.name << ": lambda_s = " << curve.lambda.str() << "\n";
      std::cout << "  raw critical count = " << raw << "\n";
    }
    try {
      TypedCounts t = typed_counts(fam, f, g.seed, g.basis());
      j["typed"] = to_json(t);
      if (!g.json)
        std::cout << "  C = " << t.cross_caps << ", J = " << t.tacnodes << ", T = "
                  << t.triple_points << ", #Sigma = " << t.total << "\n";
    } catch (const ComputationError& e) {
      j["typed_error"] = e.what();
      if (!g.json) std::cout << "  typed split unavailable: " << e.what() << "\n";
    }
  }
  if (g.json) std::cout << j.dump(2) << "\n";
  return kExitPass;
}

int cmd_catalog(const std::string& dir, const GlobalOpts& g) {
  std::vector<fs::path> files;
  for (auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".germ") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError("no .germ files in " + dir);

  bool all_pass = true;
  nlohmann::json results = nlohmann::json::array();
  for (auto& file : files) {
    GermSpec spec = load_germ_spec(file.string());
    for (auto& check : run_germ_checks(spec, g.seed, g.basis())) {
      all_pass = all_pass && check.pass;
      if (g.json)
        results.push_back(nlohmann::json{
            {"check", check.label}, {"pass", check.pass}, {"detail", check.detail}});
      else
        std::cout << (check.pass ? "PASS " : "FAIL ") << check.label << " (" << check.detail
                  << ")\n";
    }
  }
  if (g.json)
    std::cout << nlohmann::json{{"pass", all_pass}, {"checks", results}}.dump(2) << "\n";
  else
    std::cout << (all_pass ? "catalog: all checks passed" : "catalog: FAILURES") << "\n";
  return all_pass ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"image Milnor numbers of corank-1 map germs via multiple point spaces"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for generic linear forms")->capture_default_str();
  app.add_flag("--json", g.json, "machine-readable JSON output");
  app.add_option("--max-pairs", g.max_pairs, "pair-queue bound for basis computations")
      ->capture_default_str();

  std::string path, partition_arg, dir = "catalog";
  int k = 2;

  auto* mps = app.add_subcommand("mps", "print multiple point space ideals");
  mps->add_option("spec", path, "germ spec file")->required();
  mps->add_option("-k", k, "multiplicity k")->required();
  mps->add_option("-P", partition_arg, "partition, e.g. 2,1");

  auto* mu = app.add_subcommand("mu-image", "image Milnor number via Marar's formula");
  mu->add_option("spec", path)->required();

  auto* slice = app.add_subcommand("slice", "transverse slice");
  slice->add_option("spec", path)->required();

  auto* verify = app.add_subcommand("verify", "verify the Le-Greuel type identity");
  verify->add_option("spec", path)->required();

  auto* stab = app.add_subcommand("stab", "stabilisation route (resultant counts)");
  stab->add_option("spec", path)->required();

  auto* catalog = app.add_subcommand("catalog", "run the regression catalog");
  catalog->add_option("--dir", dir, "catalog directory")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    if (mps->parsed()) return cmd_mps(path, k, partition_arg, g);
    if (mu->parsed()) return cmd_mu_image(path, g);
    if (slice->parsed()) return cmd_slice(path, g);
    if (verify->parsed()) return cmd_verify(path, g);
    if (stab->parsed()) return cmd_stab(path, g);
    if (catalog->parsed()) return cmd_catalog(dir, g);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitInputError;
}
