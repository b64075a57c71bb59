#pragma once

#include <stdexcept>
#include <string>

namespace cdslab {

// Caller broke a documented precondition (bad dimensions, malformed input).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A cds/gcds/mcds move was requested on a context where it is undefined.
class InvalidMove : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input exceeds what an exhaustive routine is willing to enumerate.
class SizeLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// An identity that must hold mathematically was observed to fail.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cdslab
