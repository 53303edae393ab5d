#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lieops/invariance.hpp"

namespace lieops {

struct SuiteResult {
    std::string name;
    size_t checks = 0;
};

struct SelftestReport {
    std::string algebra;
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;
};

// Random degree <= maxDegree element with small rational coefficients.
VermaElement random_verma_element(const Context& ctx, std::mt19937_64& rng, int maxDegree = 3);

// Runs every property battery for the algebra; throws
// InternalConsistencyError on the first failure. Exhaustive at small rank,
// seeded sampling at larger scale.
SelftestReport run_selftest(const Context& ctx, std::uint64_t seed = 20260823);

}  // namespace lieops
