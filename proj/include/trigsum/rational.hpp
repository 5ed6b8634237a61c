#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "trigsum/error.hpp"

namespace trigsum {

// GMP-backed exact integers and rationals. mpq keeps values canonical
// (gcd 1, positive denominator, 0/1 for zero) as long as they are built
// through arithmetic or the two-argument constructor; the helpers below
// are the only construction paths used for raw input.
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw Error(Errc::DivisionByZero, "rational with zero denominator");
    return BigRational(num, den); // canonicalizes
}

// Accepts "p", "-p", "p/q". Throws InvalidArgument on anything else.
BigRational parse_rational(std::string_view text);

inline bool is_integer(const BigRational& q) { return denominator(q) == 1; }

inline bool fits_long(const BigRational& q) {
    using boost::multiprecision::abs;
    return is_integer(q) && abs(numerator(q)) <= BigInt(0x7fffffffffffLL);
}

inline long to_long(const BigRational& q) {
    if (!is_integer(q))
        throw Error(Errc::NonIntegerBound, "expected an integer, got " + q.str());
    return static_cast<long>(numerator(q));
}

std::string to_string(const BigRational& q);

long euler_phi(long m);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

} // namespace trigsum
