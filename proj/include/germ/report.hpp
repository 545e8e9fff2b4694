#pragma once

#include <json.hpp>

#include "germ/germ_spec.hpp"
#include "germ/image_milnor.hpp"
#include "germ/stabilisation.hpp"

namespace germ {

// Exact rationals are serialized as {"num": ..., "den": ...} pairs.
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const MararBreakdown& b);
nlohmann::json to_json(const SigmaCount& s);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const TypedCounts& t);
nlohmann::json to_json(const CurveCounts& c);

struct CheckResult {
  std::string label;
  bool pass = false;
  std::string detail;
};

// Runs every check named in the spec's expect block (plus the verification
// itself when requested) and returns one result per check.
std::vector<CheckResult> run_germ_checks(const GermSpec& spec, long seed,
                                         const BasisOptions& opts = {});

}  // namespace germ
