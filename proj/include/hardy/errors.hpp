#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

// Numeric postcondition violated (a quantity the construction guarantees came
// out wrong). Indicates a bug, not bad input. CLI maps this to exit code 2.
class postcondition_error : public std::logic_error {
public:
    explicit postcondition_error(const std::string& what) : std::logic_error(what) {}
};

// A guard on problem size was exceeded (state vector too large, enumeration
// too big). CLI maps this to exit code 3.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested parameter combination admits no paradox: the construction is
// exact but its success probability vanishes identically. Subtype of
// invalid_argument so callers that reject bad input reject this too.
class degenerate_error : public std::invalid_argument {
public:
    explicit degenerate_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace hardy
