#pragma once

#include <stdexcept>
#include <string>

namespace qcentre {

/// Raised when an operation is called outside its documented domain
/// (non-dominant weight, k > m in a q-binomial, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a mathematically undefined value is requested, e.g. the
/// classical limit of a function with a pole at q = 1.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace qcentre
