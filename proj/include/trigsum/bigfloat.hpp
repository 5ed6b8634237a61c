#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "trigsum/cyclo.hpp"
#include "trigsum/rational.hpp"

namespace trigsum {

// MPFR-backed real with runtime precision. Binary operations carry the
// larger operand precision, so precision never silently drops below the
// working level set by PrecisionGuard.
using BigFloat = boost::multiprecision::mpfr_float;

// Scopes the default precision (in decimal digits) for newly constructed
// values; restores the previous default on exit.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(digits);
    }
    ~PrecisionGuard() { BigFloat::default_precision(saved_); }

    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

BigFloat pi_value();                       // at current default precision
BigFloat to_bigfloat(const BigRational& q);
BigFloat pow10(long e);                    // 10^e

struct BigComplex {
    BigFloat re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const BigFloat& r) : re(r), im(0) {}

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator*(const BigFloat& s) const { return {re * s, im * s}; }
    BigComplex operator/(const BigComplex& o) const;

    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
};

BigFloat abs(const BigComplex& z);
BigComplex cexp(const BigComplex& z);
BigComplex csin(const BigComplex& z);
BigComplex ccos(const BigComplex& z);

// Decimal rendering with the given number of significant digits; drops a
// negligible imaginary part (relative to 10^-digits) to print a real.
std::string to_decimal_string(const BigFloat& x, unsigned digits);
std::string to_decimal_string(const BigComplex& z, unsigned digits);

// Numeric embedding of an exact element: sum of c_i * e^{2*pi*i*k/m}.
BigComplex cyclo_to_complex(const CycloElem& e, unsigned digits);

} // namespace trigsum
