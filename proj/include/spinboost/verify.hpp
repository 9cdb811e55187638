#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace spinboost::verify {

struct Options {
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
};

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    double worst = 0.0;      // largest residual seen
    std::string worst_case;  // parameters reproducing it
};

// Runs every invariant suite with deterministic draws derived from the seed.
std::vector<SuiteResult> run_all_suites(const Options& options);

bool all_passed(const std::vector<SuiteResult>& results);

// Deterministic plain-text report: same options + same build give identical
// bytes. Failed suites include the parameter tuple of their worst residual.
void write_report(const std::vector<SuiteResult>& results, const Options& options,
                  std::ostream& out);

}  // namespace spinboost::verify
