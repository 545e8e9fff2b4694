#include "germ/multiple_points.hpp"

#include <algorithm>
#include <set>

#include "germ/milnor.hpp"

namespace germ {

std::vector<int> MapGerm::source_vars() const {
  std::vector<int> vs = x_vars;
  vs.push_back(z_var);
  return vs;
}

void MapGerm::validate() const {
  if (!(p > n && n >= 1)) throw InputError(name + ": requires p > n >= 1");
  if (static_cast<int>(x_vars.size()) != n - 1)
    throw InputError(name + ": expected " + std::to_string(n - 1) + " unfolding variables");
  if (static_cast<int>(components.size()) != p - n + 1)
    throw InputError(name + ": expected " + std::to_string(p - n + 1) + " components, got " +
                     std::to_string(components.size()));
  std::vector<int> src = source_vars();
  for (const auto& h : components) {
    if (h.constant_term() != 0)
      throw InputError(name + ": component " + h.str() + " does not vanish at the origin");
    for (int v : h.variables())
      if (std::find(src.begin(), src.end(), v) == src.end())
        throw InputError(name + ": component uses undeclared variable " + variable_name(v));
  }
}

int Partition::k() const {
  int s = 0;
  for (int r : parts) s += r;
  return s;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

PartitionStats partition_stats(const Partition& part) {
  PartitionStats st;
  for (int r : part.parts) st.alpha[r]++;
  int k = part.k(), m = part.m();
  st.sign = ((k - m) % 2 == 0) ? 1 : -1;
  for (auto& [i, a] : st.alpha) {
    for (int j = 2; j <= a; ++j) st.covering_degree *= j;  // alpha_i!
    for (int j = 0; j < a; ++j) st.covering_degree *= i;   // i^alpha_i
  }
  st.beta = Rational(st.sign, st.covering_degree);
  st.beta.canonicalize();
  return st;
}

namespace {
void partitions_rec(int k, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (k == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int r = std::min(k, max_part); r >= 1; --r) {
    cur.push_back(r);
    partitions_rec(k - r, r, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int k) {
  if (k < 1) throw InputError("partitions_of: k must be >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(k, k, cur, out);
  return out;
}

std::vector<int> multiple_point_z_vars(const MapGerm& f, int k) {
  std::set<std::string> taken;
  for (int v : f.source_vars()) taken.insert(variable_name(v));
  std::vector<int> zs;
  const std::string base = variable_name(f.z_var);
  for (int i = 1; i <= k; ++i) {
    std::string nm = base + std::to_string(i);
    while (taken.count(nm)) nm = "_" + nm;
    zs.push_back(intern_variable(nm));
  }
  return zs;
}

std::vector<Polynomial> divided_differences(const MapGerm& f, int k) {
  if (k < 2) throw InputError("divided_differences: k must be >= 2");
  std::vector<int> zs = multiple_point_z_vars(f, k);
  std::vector<Polynomial> gens;
  for (const auto& h : f.components) {
    // Delta_1^{(j)}(x, z1, z2)
    Polynomial d = divided_difference(h, f.z_var, zs[0], zs[1]);
    gens.push_back(d);
    for (int i = 1; i <= k - 2; ++i) {
      // Delta_{i+1} from Delta_i by dividing out (z_{i+1} - z_{i+2})
      d = divided_difference(d, zs[i], zs[i], zs[i + 1]);
      gens.push_back(d);
    }
  }
  // order: Delta_i^{(j)} grouped by i, then j, matching the (k-1)(p-n+1) count
  std::vector<Polynomial> ordered;
  int levels = k - 1, comps = static_cast<int>(f.components.size());
  for (int i = 0; i < levels; ++i)
    for (int j = 0; j < comps; ++j) ordered.push_back(gens[j * levels + i]);
  return ordered;
}

IdealPresentation ideal_Ik(const MapGerm& f, int k) {
  std::vector<int> ambient = f.x_vars;
  for (int z : multiple_point_z_vars(f, k)) ambient.push_back(z);
  return IdealPresentation(divided_differences(f, k), ambient);
}

IdealPresentation ideal_IkP(const MapGerm& f, int k, const Partition& part) {
  if (part.k() != k) throw InputError("ideal_IkP: partition does not sum to k");
  std::vector<int> zs = multiple_point_z_vars(f, k);
  std::vector<Polynomial> gens = divided_differences(f, k);
  int offset = 0;
  for (int r : part.parts) {
    for (int i = 0; i < r - 1; ++i)
      gens.push_back(Polynomial::variable(zs[offset + i]) -
                     Polynomial::variable(zs[offset + i + 1]));
    offset += r;
  }
  std::vector<int> ambient = f.x_vars;
  for (int z : zs) ambient.push_back(z);
  return IdealPresentation(std::move(gens), ambient);
}

int expected_dim(const MapGerm& f, int k) { return f.p - k * (f.p - f.n); }

int expected_dim_P(const MapGerm& f, int k, const Partition& part) {
  return f.p - k * (f.p - f.n + 1) + part.m();
}

DeterminacyReport determinacy_dimension_check(const MapGerm& f, long seed,
                                              const BasisOptions& opts) {
  DeterminacyReport rep;
  for (int k = 2; k <= f.n + 1; ++k) {
    for (const Partition& part : partitions_of(k)) {
      IdealPresentation ideal = ideal_IkP(f, k, part);
      int e = expected_dim_P(f, k, part);
      if (e <= 0) {
        if (!local_quotient_dim(ideal, opts).finite) {
          rep.ok = false;
          rep.violations.push_back("D^" + std::to_string(k) + "(f," + part.str() +
                                   ") has positive local dimension; expected at most {0}");
        }
        continue;
      }
      // expected-positive case: e generic hyperplane slices must cut the
      // germ down to a fat point
      bool finite = false;
      for (int attempt = 0; attempt < 3 && !finite; ++attempt) {
        IdealPresentation cut = ideal;
        for (int i = 0; i < e; ++i)
          cut.generators.push_back(
              generic_linear_form(ideal.ambient_vars, seed, attempt * 16 + i));
        finite = local_quotient_dim(cut, opts).finite;
      }
      if (!finite) {
        rep.ok = false;
        rep.violations.push_back("D^" + std::to_string(k) + "(f," + part.str() +
                                 ") has local dimension exceeding the expected " +
                                 std::to_string(e) +
                                 " (not finitely determined: necessary-condition failure)");
      }
    }
  }
  return rep;
}

}  // namespace germ
