#pragma once

#include <stdexcept>
#include <string>

namespace hqg {

/// Input outside an operation's domain (bad parameters, wrong parity, singular matrix, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A configured size budget was exceeded (field table, closure cap, enumeration cap).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Seeing one of these means a formula, a census or a
/// generator recipe is wrong, never that the input was bad.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hqg
