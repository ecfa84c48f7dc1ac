#ifndef OTALG_EXACTCORE_RATIONAL_HPP
#define OTALG_EXACTCORE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace otalg {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; constructors from numerator/denominator pairs
// go through make_rational, which canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// Canonical "p/q" or "p".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer binomial(long n, long k);

// Scales v by the lcm of its denominators and divides out the content, so the
// result is a primitive integer vector spanning the same line. Zero stays zero.
std::vector<Integer> primitive_integer_vector(const Vector& v);

bool is_zero_vector(const Vector& v);

}  // namespace otalg

#endif  // OTALG_EXACTCORE_RATIONAL_HPP
