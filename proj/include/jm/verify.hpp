#pragma once

// The acceptance checks, shared by `jmoments verify` and the acceptance
// test binary.

#include <functional>
#include <string>
#include <vector>

namespace jm {

enum class Suite { Fast, Full };

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Runs checks 1..10 in order. The fast suite narrows the ranges of the
/// expensive checks; the full suite uses the complete ranges.
std::vector<CheckResult> run_suite(Suite suite, const std::function<void(const CheckResult&)>& on_result = {});

/// A single check by id (1..10).
CheckResult run_check(int id, Suite suite);

} // namespace jm
