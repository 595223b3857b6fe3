#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlcif/report.hpp"

namespace mlcif {

struct SuiteParams {
    int k = 0;        // 0 = suite default
    int n = 0;        // 0 = suite default
    int samples = 0;  // 0 = suite default
    std::optional<std::uint64_t> seed;
    int kmax = 0;     // 0 = suite default
    int threads = 0;  // 0 = MLCIF_THREADS / hardware
    std::string oeis_path = "data/a300099.txt";
};

struct SuiteResult {
    std::string suite;
    std::vector<VerificationReport> reports;
    bool pass = true;  // fail iff any non-skipped report fails
    double wall_ms = 0.0;
    std::string version;
    std::map<std::string, std::string> input_digests;
};

/// The runnable suites: enumerate-oracle, family-properties, boundary, types,
/// extension, theorem1, theorem2, young, probe.
const std::vector<std::string>& suite_names();

/// True for suites whose checks are randomized and therefore demand an
/// explicit seed (theorem1's sampled constructions, theorem2, probe).
bool suite_requires_seed(const std::string& name);

/// Runs a named suite. ParameterError on unknown names or a missing seed for
/// a randomized suite.
SuiteResult run_suite(const std::string& name, const SuiteParams& params = {});

std::string suite_result_to_json(const SuiteResult& result);
SuiteResult suite_result_from_json(const std::string& text);

}  // namespace mlcif
