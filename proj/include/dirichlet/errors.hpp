#pragma once

#include <stdexcept>
#include <string>

namespace dirichlet {

// Violated operation precondition (bad argument, divergent case, ...).
// The CLI maps this to exit code 2.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A requested tolerance could not be met within the configured budget
// (truncation range, node count, N cap).  CLI exit code 3.
class tolerance_error : public std::runtime_error {
public:
    explicit tolerance_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A truncation-saturation diagnostic failed: the grid is too aggressive
// for the available N budget.  CLI exit code 4.
class saturation_error : public std::runtime_error {
public:
    explicit saturation_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dirichlet
