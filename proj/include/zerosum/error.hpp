#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zerosum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented hypothesis of an operation does not hold for its arguments.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A closed-form expression left the integers where integrality is required.
class FormulaDomainError : public Error {
public:
    using Error::Error;
};

/// An explicit construction cannot be realized for the given parameters.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Malformed caller input: index out of range, unparsable file, and so on.
class InputError : public Error {
public:
    using Error::Error;
};

/// Signed 64-bit arithmetic would have wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// An exhaustive search was refused because its estimated cost exceeds the ceiling.
class BudgetError : public Error {
public:
    BudgetError(const std::string& what, std::uint64_t estimate, std::uint64_t ceiling)
        : Error(what), estimate_(estimate), ceiling_(ceiling) {}

    std::uint64_t estimate() const noexcept { return estimate_; }
    std::uint64_t ceiling() const noexcept { return ceiling_; }

private:
    std::uint64_t estimate_;
    std::uint64_t ceiling_;
};

}  // namespace zerosum
