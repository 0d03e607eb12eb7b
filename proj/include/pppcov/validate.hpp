#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pppcov {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;   // worst observed error or the failing case
};

// closed forms, mutual oracles, and distributional tests; deterministic for a
// fixed seed
std::vector<CheckResult> run_validation_suite(std::uint64_t seed = 20260821ull);

} // namespace pppcov
