#ifndef PGQ_NUMERIC_HPP
#define PGQ_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace pgq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// q^e as an exact big integer (e >= 0).
BigInt big_pow(std::uint64_t q, unsigned e);

/// Exact binomial coefficient C(n, k).
BigInt binomial(unsigned n, unsigned k);

/// Parses "3/5", "0.75", or "7" into an exact rational.
/// Throws InvalidArgs on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text form: "num/den", or just "num" when den == 1.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);
double to_double(const BigInt& n);

/// ceil(r * size) for a rational r and integer size >= 0.
BigInt ceil_mul(const Rational& r, const BigInt& size);

/// FNV-1a 64-bit fingerprint, used for manifest output checksums.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(const std::string& s);

} // namespace pgq

#endif
