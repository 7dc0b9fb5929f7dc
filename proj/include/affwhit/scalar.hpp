#pragma once

/**
 * @file scalar.hpp
 * @brief Exact rational scalars and the library's error hierarchy.
 *
 * Every computation in affwhit is exact.  Scalars are GMP rationals kept in
 * canonical form (reduced, positive denominator); there is no floating point
 * anywhere in the library.
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace affwhit {

using Scalar = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Parses "p" or "p/q" (optional sign, decimal digits only).  Rejects
/// decimals, exponents, whitespace-only and zero denominators.
Scalar parse_scalar(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& s);

/// x^e for e >= 0.
Scalar pow(const Scalar& x, unsigned long e);

} // namespace affwhit
