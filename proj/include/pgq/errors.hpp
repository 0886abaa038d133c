#ifndef PGQ_ERRORS_HPP
#define PGQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgq {

// Base class for all library errors. Subclasses map onto CLI exit codes:
// validation errors -> 2, resource caps -> 3, sampling failure -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgs : Error {
    using Error::Error;
};

struct NotPrimePower : InvalidArgs {
    using InvalidArgs::InvalidArgs;
};

struct UnsupportedSize : InvalidArgs {
    using InvalidArgs::InvalidArgs;
};

struct DivisionByZero : InvalidArgs {
    using InvalidArgs::InvalidArgs;
};

struct DimensionMismatch : InvalidArgs {
    using InvalidArgs::InvalidArgs;
};

struct UnknownElement : InvalidArgs {
    using InvalidArgs::InvalidArgs;
};

// Enumeration or brute-force request exceeds a configured cap.
struct SizeOverflow : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct SamplingExhausted : Error {
    using Error::Error;
};

} // namespace pgq

#endif
