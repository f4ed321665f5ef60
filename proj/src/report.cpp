#include "foxcalc/report.hpp"

#include <algorithm>

namespace fox {

void CheckReport::fail(const std::string& witness) {
    if (!passed) return;
    passed = false;
    counterexample = witness;
    std::replace(counterexample.begin(), counterexample.end(), '\n', ' ');
}

std::string CheckReport::line() const {
    std::string out = passed ? "PASS " : "FAIL ";
    out += check + " samples=" + std::to_string(samples) + " seed=" + std::to_string(seed);
    if (!passed) out += " counterexample=" + counterexample;
    return out;
}

}  // namespace fox
