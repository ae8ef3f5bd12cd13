#pragma once

#include <string>
#include <vector>

#include "asai/records.hpp"

namespace asai {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Module invariant suites.  Each check is named "<module>/<property>" and
/// carries the measured deviation in detail.
std::vector<CheckResult> verify_field_tower(const Tower& tw, uint64_t seed);
std::vector<CheckResult> verify_matgroup(Workspace& ws);
std::vector<CheckResult> verify_cuspidal(Workspace& ws);
std::vector<CheckResult> verify_bessel_module(Workspace& ws);
std::vector<CheckResult> verify_asai(Workspace& ws, double tol);
std::vector<CheckResult> verify_level_zero(int64_t q, uint64_t seed);
/// Every suite above, in module order, for the workspace's tower.
std::vector<CheckResult> verify_all(Workspace& ws, double tol);

bool all_pass(const std::vector<CheckResult>& rs);

}  // namespace asai
