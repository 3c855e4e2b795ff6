#pragma once

#include <string>
#include <vector>

namespace pwl {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// The seven acceptance checks, in order. Each is self-contained and records
// a one-line outcome summary.
CheckResult check_root_constants();
CheckResult check_wronskian_oracle();
CheckResult check_discriminant_identity();
CheckResult check_melnikov_cross_validation(unsigned seed = 2024);
CheckResult check_limit_cycle_realization();
CheckResult check_table_reproduction(int max_exponent = 12);
CheckResult check_property_suite(unsigned seed = 77);

std::vector<CheckResult> run_acceptance(unsigned seed = 2024);

}  // namespace pwl
