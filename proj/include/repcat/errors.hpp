#pragma once

#include <stdexcept>
#include <string>

namespace repcat {

/// Input outside an operation's mathematical domain (zero valuation argument,
/// composite "prime", malformed palindrome, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// x has no inverse modulo m.
class NotInvertibleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Asked for a primitive root modulo 2^alpha with alpha >= 3.
class NoPrimitiveRootError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The input is valid but exceeds what fixed-width arithmetic or the
/// factorization budget can handle.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace repcat
