#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace evolab {

struct CheckTally {
    std::string name;
    std::size_t pass = 0;
    std::size_t fail = 0;
    /// Samples where a check could not be evaluated for a documented reason
    /// (for instance a dependency coefficient without a square root).
    std::size_t deviation = 0;
    std::vector<std::string> failures;  // first few, for the report

    void record(bool ok, const std::string& detail);
    void skip() { ++deviation; }
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckTally> checks;

    bool ok() const;
    std::string render() const;
};

inline const std::vector<std::string> kVerifySuites{"nilpotent", "maxsolvable", "families", "paper-examples"};

/// `count` = 0 picks the suite default. InvalidArgument for unknown suites.
VerifyReport run_suite(const std::string& suite, std::uint64_t seed, std::size_t count = 0);

}  // namespace evolab
