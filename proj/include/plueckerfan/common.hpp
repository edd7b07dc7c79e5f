#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pf {

using Rational = mpq_class;
using Elem = std::uint32_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments or malformed input (CLI exit code 2).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Size guards (CLI exit code 3).
class CapacityError : public Error {
public:
    using Error::Error;
};

// Raised when a pair that needs to be incomparable is comparable.
class ComparablePair : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// An internal consistency check failed.
class InternalError : public Error {
public:
    using Error::Error;
};

inline void check(bool ok, const std::string& what)
{
    if (!ok) throw InternalError(what);
}

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

}  // namespace pf
