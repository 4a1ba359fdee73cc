#pragma once

#include <stdexcept>
#include <string>

namespace qca {

// Input that cannot be parsed. `line` is 1-based when known, 0 otherwise.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg, int line = 0)
        : std::runtime_error(msg), line(line) {}
    int line;
};

// A constraint system (or instance) with no binary solution.
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested size exceeds what the implementation supports.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated a module contract (e.g. solutions outside the search space).
struct contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qca
