#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treehardy/ell2.hpp"

namespace treehardy {

struct RunConfig {
    int q = 2;
    int depth = 5;
    int degree = 3;
    double tol = 1e-12;
    double tol_eig = 1e-8;
    double inv_threshold = 1e-9;
    std::uint64_t seed = 7;
};

// Throws InvalidParameterError when the configuration is unusable.
void validate(const RunConfig& config);

// One verified identity: the measured residual against its threshold,
// tagged with the mathematical law it instantiates.
struct VerifyRecord {
    std::string suite;
    std::string name;
    std::string law;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// Runs every invariant suite. Deterministic for a fixed config (a single
// seeded generator drives all random draws in a fixed order).
std::vector<VerifyRecord> run_verification(const RunConfig& config);

}  // namespace treehardy
