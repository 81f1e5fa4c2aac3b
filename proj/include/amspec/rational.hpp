// rational.hpp — Exact rational scalar arithmetic used throughout the library.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace amspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);

// q^e for integer e; e < 0 requires q != 0.
Rational rational_pow(const Rational& q, long e);

// floor(v^(1/k)) for v >= 0, k >= 1.
BigInt integer_kth_root(const BigInt& v, unsigned k);

// Exact nonnegative k-th root of q >= 0, when one exists in the rationals.
std::optional<Rational> exact_kth_root(const Rational& q, unsigned k);

// Accepts "p", "-p", "p/q" and plain decimal literals such as "1.25".
Rational parse_rational(const std::string& text);

// Canonical "p" or "p/q".
std::string format_rational(const Rational& q);

// Exact value of a finite double (every finite double is dyadic).
Rational rational_from_double(double x);

}  // namespace amspec
