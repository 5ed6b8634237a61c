#pragma once

#include <memory>
#include <vector>

#include "trigsum/polynomial.hpp"
#include "trigsum/rational.hpp"

namespace trigsum {

// Exact arithmetic in Q(zeta_m), zeta_m = e^{2*pi*i/m}. Elements are
// rational-coefficient polynomials in zeta_m reduced mod the m-th
// cyclotomic polynomial; equality of reduced coefficient vectors is
// equality in the field, which is what makes identity checks decisive.

class CycloContext;
using ContextPtr = std::shared_ptr<const CycloContext>;

class CycloContext {
public:
    // Cached factory. Throws CapExceeded when phi(m) > degree_cap().
    static ContextPtr get(long m);

    static long degree_cap() { return 4096; }

    long order() const { return m_; }
    long phi() const { return phi_; }

    // Phi_m, monic, integer coefficients, degree phi().
    const poly::IntPoly& minpoly() const { return minpoly_; }

    // x^k reduced mod Phi_m, valid for 0 <= k <= max_power().
    const std::vector<BigRational>& power_row(long k) const { return rows_[k]; }
    long max_power() const { return static_cast<long>(rows_.size()) - 1; }

private:
    explicit CycloContext(long m);

    long m_;
    long phi_;
    poly::IntPoly minpoly_;
    std::vector<std::vector<BigRational>> rows_;
};

class CycloElem {
public:
    // Zero of Q(zeta_1) = Q.
    CycloElem();
    explicit CycloElem(const BigRational& value);
    CycloElem(ContextPtr ctx, std::vector<BigRational> coeffs);

    static CycloElem zero(ContextPtr ctx);
    static CycloElem from_rational(ContextPtr ctx, const BigRational& value);

    long order() const { return ctx_->order(); }
    const ContextPtr& context() const { return ctx_; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool operator==(const CycloElem& rhs) const;
    bool operator!=(const CycloElem& rhs) const { return !(*this == rhs); }

    // Ring operations; both operands must share one order (MixedOrders
    // otherwise). Callers with mixed orders lift via lift_to_order first.
    CycloElem operator+(const CycloElem& rhs) const;
    CycloElem operator-(const CycloElem& rhs) const;
    CycloElem operator*(const CycloElem& rhs) const;
    CycloElem operator-() const;
    CycloElem operator*(const BigRational& c) const;

    CycloElem& operator+=(const CycloElem& rhs);
    CycloElem& operator-=(const CycloElem& rhs);

    // Extended Euclid against Phi_m over Q; DivisionByZero for zero.
    CycloElem inverse() const;
    CycloElem pow(long e) const;

    // zeta_m = zeta_M^{M/m} substitution; m must divide M.
    CycloElem lift_to_order(long M) const;

    // The rational value when all coefficients of index >= 1 vanish,
    // NotRational otherwise.
    BigRational to_rational() const;

private:
    ContextPtr ctx_;
    std::vector<BigRational> coeffs_;
};

// zeta_m^{a mod m} as an element of Q(zeta_m).
CycloElem root_of_unity(const ContextPtr& ctx, long a);

// Lifts both operands to the lcm of their orders and applies op; this is
// the convenience layer over the strict same-order operators.
CycloElem join_add(const CycloElem& x, const CycloElem& y);
CycloElem join_sub(const CycloElem& x, const CycloElem& y);
CycloElem join_mul(const CycloElem& x, const CycloElem& y);

// sin(a*pi/q) and cos(a*pi/q) as exact elements of Q(zeta_M),
// M = lcm(4, 2q'), via the exponential definitions
//   sin pi*z = (e^{i*pi*z} - e^{-i*pi*z}) / (2i).
// a/q is reduced before the field is chosen.
CycloElem sin_pi_rational(const BigInt& a, const BigInt& q);
CycloElem cos_pi_rational(const BigInt& a, const BigInt& q);
CycloElem sin_pi_rational(const BigRational& r);
CycloElem cos_pi_rational(const BigRational& r);

// Closed-form inverses: 1/(zeta^u - 1) = (1/d) * sum_{t<d} t*zeta^{ut}
// with d the order of zeta^u, so quotients of sines never pay for a
// Euclidean inversion. DivisionByZero when the sine/cosine vanishes.
CycloElem inv_sin_pi_rational(const BigRational& r);
CycloElem inv_cos_pi_rational(const BigRational& r);

} // namespace trigsum
