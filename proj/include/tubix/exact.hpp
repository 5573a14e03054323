#ifndef TUBIX_EXACT_HPP
#define TUBIX_EXACT_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tubix {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// A point in Q^n. Coordinates are kept in canonical reduced form by GMP, so
// equality and ordering of points are exact.
using Point = std::vector<Rational>;

// "p" for integers, "p/q" otherwise.
std::string to_exact_string(const Rational& q);
std::string to_exact_string(const BigInt& z);

// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

// Parses "p" or "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

BigInt pow_int(long base, unsigned exponent);

}  // namespace tubix

#endif
