#pragma once

// Seeded property suite over the exact identities of the Fock algebra and the
// vertex expansion. Every identity is a theorem at finite cutoff, so a failure
// means an implementation bug.

#include <cstdint>
#include <string>
#include <vector>

#include <fockvx/basis.hpp>
#include <fockvx/serialize.hpp>
#include <fockvx/tuples.hpp>

namespace fockvx
{

struct VerifyOptions {
    Cutoffs cutoffs;
    BasisConfig basis = BasisConfig::identity(2);
    std::uint64_t seed = 1;
    int trials = 5;
};

struct CheckReport {
    std::string name;
    std::string statement;
    bool passed = true;
    long cases = 0;
    // First failing input; null when passed.
    json counterexample;
};

// Throws config_error when trials < 1 or the cutoffs/basis are inconsistent.
std::vector<CheckReport> run_verification(const VerifyOptions &options);

} // namespace fockvx
