#pragma once

#include <stdexcept>
#include <string>

namespace somborlike {

// Enumeration-size guard: requests beyond the configured cap are refused
// outright, never silently truncated.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace somborlike
