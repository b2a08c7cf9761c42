#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ostar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Copy counts. Every arithmetic step on counts goes through the checked
// helpers below and throws ErrorKind::Overflow instead of wrapping.
using Count = std::uint64_t;

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);
Count binomial_u64(std::uint64_t n, std::uint64_t k);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt ipow(const BigInt& base, unsigned exp);
Rational rpow(const Rational& base, unsigned exp);

Rational make_rational(const BigInt& num, const BigInt& den);

double to_double(const Rational& q);

// Fixed-point decimal with `digits` fractional digits, rounded half away
// from zero. Exact rationals are reported this way next to their p/q form.
std::string to_decimal(const Rational& q, int digits = 50);
std::string to_fraction(const Rational& q);

// Parses "p/q", an integer, or a finite decimal such as "0.3".
Rational parse_rational(const std::string& text);

}  // namespace ostar
