#pragma once

#include <vector>

#include "trigsum/rational.hpp"

namespace trigsum {

// Dense univariate polynomials, coefficient of x^i at index i.
// Used for cyclotomic polynomials, reduction tables, and the extended
// Euclidean inverse; nothing here is performance-critical beyond O(n^2).
namespace poly {

using RatPoly = std::vector<BigRational>;
using IntPoly = std::vector<BigInt>;

void trim(RatPoly& p);
long degree(const RatPoly& p); // -1 for the zero polynomial

RatPoly add(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
RatPoly mul(const RatPoly& a, const RatPoly& b);
RatPoly scale(const RatPoly& a, const BigRational& c);

// Quotient and remainder with deg(r) < deg(b); b must be nonzero.
struct DivMod {
    RatPoly quotient;
    RatPoly remainder;
};
DivMod divmod(const RatPoly& a, const RatPoly& b);

BigRational eval(const RatPoly& p, const BigRational& x);

IntPoly mul(const IntPoly& a, const IntPoly& b);
BigInt eval(const IntPoly& p, const BigInt& x);

} // namespace poly
} // namespace trigsum
