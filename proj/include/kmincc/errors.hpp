#pragma once

#include <stdexcept>
#include <string>

namespace kmincc {

// Raised when an exhaustive search would exceed its configured candidate
// budget. Callers that can fall back to a heuristic catch this; the CLI maps
// it to a distinct exit code.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kmincc
