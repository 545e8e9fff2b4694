#pragma once

#include <map>
#include <string>
#include <vector>

#include "germ/basis.hpp"
#include "germ/polynomial.hpp"

namespace germ {

// Corank-1 germ in normal form f(x,z) = (x, h_n(x,z), ..., h_p(x,z)).
struct MapGerm {
  std::string name;
  int n = 1;                        // source dimension
  int p = 2;                        // target dimension
  std::vector<int> x_vars;          // n-1 unfolding variables
  int z_var = -1;                   // the corank variable
  std::vector<Polynomial> components;  // h_n ... h_p  (p-n+1 of them)

  std::vector<int> source_vars() const;  // x_vars followed by z_var
  void validate() const;                 // throws InputError on violations
};

struct Partition {
  std::vector<int> parts;  // non-increasing, positive
  int k() const;
  int m() const { return static_cast<int>(parts.size()); }
  std::string str() const;
  bool operator==(const Partition&) const = default;
};

struct PartitionStats {
  std::map<int, int> alpha;  // i -> #{j : r_j = i}
  int sign = 1;              // (-1)^(k - sum alpha_i)
  long covering_degree = 1;  // prod alpha_i! * i^alpha_i
  Rational beta;             // sign / covering_degree
};

PartitionStats partition_stats(const Partition& part);
std::vector<Partition> partitions_of(int k);

// The k copies z_1..z_k of the corank variable used by D^k(f).
std::vector<int> multiple_point_z_vars(const MapGerm& f, int k);

// The (k-1)(p-n+1) iterated divided differences generating I_k(f).
std::vector<Polynomial> divided_differences(const MapGerm& f, int k);

IdealPresentation ideal_Ik(const MapGerm& f, int k);
IdealPresentation ideal_IkP(const MapGerm& f, int k, const Partition& part);

int expected_dim(const MapGerm& f, int k);                           // p - k(p-n)
int expected_dim_P(const MapGerm& f, int k, const Partition& part);  // p - k(p-n+1) + m

struct DeterminacyReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Necessary-condition check for finite determinacy: every D^k(f,P),
// k = 2..n+1, must be empty, zero-dimensional at the origin, or an
// expected-codimension ICIS (tested with generic linear slices).
DeterminacyReport determinacy_dimension_check(const MapGerm& f, long seed = 0,
                                              const BasisOptions& opts = {});

}  // namespace germ
