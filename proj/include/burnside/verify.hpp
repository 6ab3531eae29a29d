#pragma once

#include <cstdint>
#include <string>

#include "burnside/ring.hpp"

namespace burnside {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  uint64_t seed = 1;
  int cap = kDefaultOrderCap;
  bool timing = false;  // annotate slow checks; off keeps reports
                        // byte-identical across runs
};

// Named property suites over one group: "ring", "galois", "biset",
// "spectrum", "units", or "all". Each check aggregates one invariant
// from the module it is named after.
std::vector<CheckResult> verify_suite(const RingContext& ctx,
                                      const std::string& suite,
                                      const VerifyOptions& opt);

// Dual-route checks over externally supplied morphism fixtures
// ({"morphisms": [{dom, cod, map}, ...]} in the fixture JSON format).
std::vector<CheckResult> verify_fixture_file(const RingContext& ctx,
                                             const std::string& path);

}  // namespace burnside
