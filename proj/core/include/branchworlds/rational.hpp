#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace branchworlds {

/// Exact arbitrary-precision rational; always kept in canonical form.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "a", "a/b", "-a/b" or a finite decimal such as "0.125" / "-1.5e-3"
/// exactly. Throws Error{ParseError} on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "a/b" in lowest terms, or "a" when the value is an
/// integer. Re-parses to the identical value.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

double to_double(const Rational& value);

/// Exact value of a finite double.
Rational from_double(double value);

/// Best rational approximation with denominator <= max_denominator
/// (continued fractions with semiconvergents).
Rational approximate(double value, std::uint64_t max_denominator);

/// Returns x reduced into [0, 1).
Rational wrap_unit(const Rational& x);

Rational pow(const Rational& base, unsigned long exponent);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

}  // namespace branchworlds
