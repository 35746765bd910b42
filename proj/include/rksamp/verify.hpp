#pragma once

// Self-contained invariant suite: every check draws its own instances from a
// seeded generator and returns a named pass/fail row.  Used by the `verify`
// subcommand and exercised directly by the tests.

#include <cstdint>
#include <string>
#include <vector>

#include "rksamp/kernel_core.hpp"

namespace rksamp {

// splitmix64: 64-bit state, one multiply-xorshift chain per draw.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // Uniform in [0, 1) with 53 random bits.
    double uniform01();
    double uniform(double lo, double hi);
    // Uniform on the complex disk of radius r.
    Complex complex_disk(double r);

  private:
    std::uint64_t state_;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_err = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    // When finite, replaces every check's default tolerance.
    double tol_override = 0.0;
    bool has_tol_override = false;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace rksamp
