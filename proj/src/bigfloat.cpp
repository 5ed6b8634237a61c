#include "trigsum/bigfloat.hpp"

#include <boost/math/constants/constants.hpp>

#include "trigsum/error.hpp"

namespace trigsum {

BigFloat pi_value() { return boost::math::constants::pi<BigFloat>(); }

BigFloat to_bigfloat(const BigRational& q) {
    return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

BigFloat pow10(long e) {
    using boost::multiprecision::pow;
    return pow(BigFloat(10), static_cast<int>(e));
}

BigComplex BigComplex::operator/(const BigComplex& o) const {
    BigFloat denom = o.re * o.re + o.im * o.im;
    if (denom == 0) throw Error(Errc::DivisionByZero, "complex division by zero");
    return {(re * o.re + im * o.im) / denom, (im * o.re - re * o.im) / denom};
}

BigFloat abs(const BigComplex& z) {
    using boost::multiprecision::sqrt;
    return sqrt(z.re * z.re + z.im * z.im);
}

BigComplex cexp(const BigComplex& z) {
    using boost::multiprecision::cos;
    using boost::multiprecision::exp;
    using boost::multiprecision::sin;
    BigFloat scale = exp(z.re);
    return {scale * cos(z.im), scale * sin(z.im)};
}

BigComplex csin(const BigComplex& z) {
    using boost::multiprecision::cos;
    using boost::multiprecision::cosh;
    using boost::multiprecision::sin;
    using boost::multiprecision::sinh;
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

BigComplex ccos(const BigComplex& z) {
    using boost::multiprecision::cos;
    using boost::multiprecision::cosh;
    using boost::multiprecision::sin;
    using boost::multiprecision::sinh;
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

std::string to_decimal_string(const BigFloat& x, unsigned digits) {
    return x.str(digits);
}

std::string to_decimal_string(const BigComplex& z, unsigned digits) {
    using boost::multiprecision::abs;
    BigFloat scale = abs(z.re) + abs(z.im);
    BigFloat tol = scale * pow10(-static_cast<long>(digits));
    if (abs(z.im) <= tol || z.im == 0) return z.re.str(digits);
    std::string im_part = z.im.str(digits);
    if (!im_part.empty() && im_part[0] != '-') im_part = "+" + im_part;
    return z.re.str(digits) + im_part + "i";
}

BigComplex cyclo_to_complex(const CycloElem& e, unsigned digits) {
    PrecisionGuard guard(digits + 15);
    using boost::multiprecision::cos;
    using boost::multiprecision::sin;
    BigFloat two_pi = 2 * pi_value();
    long m = e.order();
    BigComplex acc;
    for (long i = 0; i < static_cast<long>(e.coeffs().size()); ++i) {
        const BigRational& c = e.coeffs()[i];
        if (c == 0) continue;
        BigFloat theta = two_pi * BigFloat(i) / BigFloat(m);
        BigFloat cf = to_bigfloat(c);
        acc += BigComplex(cf * cos(theta), cf * sin(theta));
    }
    return acc;
}

} // namespace trigsum
