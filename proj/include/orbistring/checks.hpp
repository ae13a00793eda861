#pragma once

// The acceptance suite as library code, shared by `orbistring selftest` and
// the acceptance test binary. Criteria 1..9 run here; 10 compares two
// selftest runs and lives with the binary. Details never mention timings, so
// a report depends only on the seed.

#include <cstdint>
#include <string>
#include <vector>

namespace orbistring {

struct CheckResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    /// Failed only on a known contradiction in the statement itself.
    bool analysed = false;
    double limit_seconds = 0;  // 0: no limit
};

std::vector<int> criterion_ids();
CheckResult run_criterion(int id, std::uint64_t seed);
std::string format_result(const CheckResult& r);

}  // namespace orbistring
