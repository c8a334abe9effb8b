#pragma once

#include <string>

namespace spk {

// Outcome of one verification step.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

} // namespace spk
