#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fox {

// Outcome of a sampled identity check. Prints as
// "PASS|FAIL <check> samples=<n> seed=<s> [counterexample=...]".
struct CheckReport {
    std::string check;
    bool passed = true;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::string counterexample;
    std::vector<std::string> notes;

    CheckReport() = default;
    CheckReport(std::string name, std::size_t n, std::uint64_t s) : check(std::move(name)), samples(n), seed(s) {}

    // Records the first failure only.
    void fail(const std::string& witness);
    std::string line() const;
};

}  // namespace fox
