#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fibcorr {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;  // empty on success, diagnostic on failure
};

/// Runs the cross-module invariant suite up to family index max_index
/// (3..30). Randomized properties draw from the given seed, so output is a
/// pure function of the arguments. Correlation and brute-force sweeps that
/// would be quadratic in F_max_index are clamped internally; the clamp is
/// reported in the check detail.
std::vector<CheckResult> run_verification(int max_index, std::uint32_t seed);

}  // namespace fibcorr
