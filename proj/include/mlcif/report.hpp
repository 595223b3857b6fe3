#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mlcif {

/// Structured pass/fail record tying a verified claim to computed evidence.
/// Failing reports always carry a concrete counterexample in `witnesses`.
struct VerificationReport {
    std::string claim;                                         // claim anchor string
    std::map<std::string, std::string> params;                 // k, n, seed, sample, ...
    bool pass = false;
    bool skipped = false;                                      // ran out of inputs, not a failure
    bool warning = false;                                      // e.g. near-margin pass
    std::optional<double> margin;                              // min relative margin seen
    std::string note;
    std::vector<std::pair<std::string, std::string>> witnesses;

    std::string status() const { return skipped ? "skip" : (pass ? "pass" : "fail"); }
};

}  // namespace mlcif
