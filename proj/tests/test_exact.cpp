#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trigsum/bigfloat.hpp"
#include "trigsum/cyclo.hpp"
#include "trigsum/error.hpp"
#include "trigsum/eval_exact.hpp"
#include "trigsum/expr.hpp"

using namespace trigsum;

namespace {

BigRational Q(long n, long d = 1) { return BigRational(n, d); }

CycloElem rational_elem(long n, long d = 1) { return CycloElem(Q(n, d)); }

// Random element of Q(zeta_m) with small coefficients.
CycloElem random_elem(const ContextPtr& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<BigRational> coeffs(ctx->phi());
    for (auto& c : coeffs) c = Q(num(rng), den(rng));
    return CycloElem(ctx, std::move(coeffs));
}

} // namespace

TEST_CASE("cyclotomic polynomials for small orders") {
    auto c1 = CycloContext::get(1);
    CHECK(c1->phi() == 1);
    CHECK(c1->minpoly() == poly::IntPoly{BigInt(-1), BigInt(1)}); // x - 1

    auto c4 = CycloContext::get(4);
    CHECK(c4->phi() == 2);
    CHECK(c4->minpoly() == poly::IntPoly{BigInt(1), BigInt(0), BigInt(1)}); // x^2 + 1

    auto c13 = CycloContext::get(13);
    CHECK(c13->phi() == 12);
    for (const auto& coeff : c13->minpoly()) CHECK(coeff == 1); // 1 + x + ... + x^12
}

TEST_CASE("Phi_m divides x^m - 1 exactly") {
    for (long m : {2, 3, 4, 6, 9, 12, 15, 24, 30, 60}) {
        auto ctx = CycloContext::get(m);
        poly::RatPoly phi(ctx->minpoly().size());
        for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = BigRational(ctx->minpoly()[i]);
        poly::RatPoly xm(m + 1);
        xm[0] = -1;
        xm[m] = 1;
        auto dm = poly::divmod(xm, phi);
        CHECK(poly::degree(dm.remainder) == -1);
        CHECK(poly::mul(dm.quotient, phi) == xm);
    }
}

TEST_CASE("degree cap is loud") {
    CHECK_THROWS_AS(CycloContext::get(16384), Error);
    try {
        CycloContext::get(16384);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CapExceeded);
    }
}

TEST_CASE("roots of unity") {
    auto c4 = CycloContext::get(4);
    CycloElem i = root_of_unity(c4, 1);
    CHECK(i * i == rational_elem(-1).lift_to_order(4));

    auto c3 = CycloContext::get(3);
    CycloElem z = root_of_unity(c3, 1);
    CHECK(z + z * z == rational_elem(-1).lift_to_order(3));

    auto c13 = CycloContext::get(13);
    CHECK(root_of_unity(c13, 13) == rational_elem(1).lift_to_order(13));

    auto c5 = CycloContext::get(5);
    CHECK(root_of_unity(c5, 1) * root_of_unity(c5, 4) ==
          rational_elem(1).lift_to_order(5));
}

TEST_CASE("mixed orders are rejected by the strict operators") {
    CycloElem a = root_of_unity(CycloContext::get(3), 1);
    CycloElem b = root_of_unity(CycloContext::get(4), 1);
    CHECK_THROWS_AS(a + b, Error);
    CHECK(join_mul(a, b).order() == 12);
}

TEST_CASE("inverse") {
    CHECK(rational_elem(2).inverse() == rational_elem(1, 2));

    for (long m : {5, 8, 12}) {
        auto ctx = CycloContext::get(m);
        CycloElem z = root_of_unity(ctx, 1);
        CHECK(z.inverse() == root_of_unity(ctx, m - 1));
    }

    CHECK_THROWS_AS(rational_elem(0).inverse(), Error);
    try {
        rational_elem(0).inverse();
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DivisionByZero);
    }
}

TEST_CASE("field axioms sampled in Q(zeta_12)") {
    auto ctx = CycloContext::get(12);
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        CycloElem x = random_elem(ctx, rng);
        CycloElem y = random_elem(ctx, rng);
        CycloElem z = random_elem(ctx, rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero())
            CHECK(x * x.inverse() == CycloElem::from_rational(ctx, BigRational(1)));
    }
}

TEST_CASE("sin and cos of rational multiples of pi") {
    CHECK(sin_pi_rational(Q(1, 2)) == rational_elem(1).lift_to_order(4));
    CHECK(sin_pi_rational(Q(1, 6)).to_rational() == Q(1, 2));

    CycloElem s = sin_pi_rational(Q(1, 4));
    CHECK((s * s).to_rational() == Q(1, 2));

    CHECK(cos_pi_rational(Q(0)).to_rational() == 1);
    CHECK(cos_pi_rational(Q(1)).to_rational() == -1);
    CHECK(cos_pi_rational(Q(1, 3)).to_rational() == Q(1, 2));
}

TEST_CASE("closed-form inverses of sin and cos") {
    for (long q = 1; q <= 9; ++q) {
        for (long a = 0; a <= 2 * q; ++a) {
            BigRational r(a, q);
            CycloElem s = sin_pi_rational(r);
            if (s.is_zero()) {
                CHECK_THROWS_AS(inv_sin_pi_rational(r), Error);
            } else {
                CHECK(join_mul(s, inv_sin_pi_rational(r)) ==
                      CycloElem(BigRational(1)).lift_to_order(s.order()));
            }
            CycloElem c = cos_pi_rational(r);
            if (c.is_zero()) {
                CHECK_THROWS_AS(inv_cos_pi_rational(r), Error);
            } else {
                CHECK(join_mul(c, inv_cos_pi_rational(r)) ==
                      CycloElem(BigRational(1)).lift_to_order(c.order()));
            }
        }
    }
}

TEST_CASE("sin^2 + cos^2 = 1 exactly for all 1 <= a <= q <= 30") {
    for (long q = 1; q <= 30; ++q) {
        for (long a = 1; a <= q; ++a) {
            CycloElem s = sin_pi_rational(Q(a, q));
            CycloElem c = cos_pi_rational(Q(a, q));
            CycloElem total = join_add(s * s, c * c);
            CHECK(total.to_rational() == 1);
        }
    }
}

TEST_CASE("minimal polynomial annihilates its root for m <= 60") {
    for (long m = 1; m <= 60; ++m) {
        auto ctx = CycloContext::get(m);
        CycloElem z = root_of_unity(ctx, 1);
        CycloElem acc = CycloElem::zero(ctx);
        for (long i = static_cast<long>(ctx->minpoly().size()) - 1; i >= 0; --i)
            acc = acc * z + CycloElem::from_rational(ctx, BigRational(ctx->minpoly()[i]));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("numeric embedding agrees with direct sine for a, q <= 24") {
    PrecisionGuard guard(65);
    using boost::multiprecision::abs;
    using boost::multiprecision::sin;
    BigFloat tol = pow10(-45);
    BigFloat pi = pi_value();
    for (long q = 1; q <= 24; ++q) {
        for (long a = 1; a <= 24; ++a) {
            BigComplex approx = cyclo_to_complex(sin_pi_rational(Q(a, q)), 50);
            BigFloat direct = sin(pi * a / q);
            CHECK(abs(approx.re - direct) < tol);
            CHECK(abs(approx.im) < tol);
        }
    }
}

TEST_CASE("to_rational") {
    CHECK(rational_elem(3, 7).to_rational() == Q(3, 7));
    CHECK_THROWS_AS(root_of_unity(CycloContext::get(3), 1).to_rational(), Error);
    auto c3 = CycloContext::get(3);
    CycloElem sum = root_of_unity(c3, 1) + root_of_unity(c3, 2);
    CHECK(sum.to_rational() == -1);
}

TEST_CASE("eval_exact on the catalog shapes") {
    // Single-term instance of the even-modulus quotient sum: n=4, j=2.
    ExprPtr lhs = parse(
        "sum(k=1..n/2-1, sin((j-1)*k*pi/n)*sin((j+1)*k*pi/n)"
        " / (sin(k*pi/n)^2 * sin(j*k*pi/n)^2))");
    CycloElem v = eval_exact(lhs, {{"n", Q(4)}, {"j", Q(2)}});
    CHECK(v.to_rational() == 1);

    // Odd-modulus half-node sum at n=3, j=2 evaluates to 8/3 = (n^2-1)/3.
    ExprPtr lhs23 = parse(
        "sum(k=0..(n-3)/2, sin((j-1)*(2*k+1)*pi/(2*n))*sin((j+1)*(2*k+1)*pi/(2*n))"
        " / (sin((2*k+1)*pi/(2*n))^2 * sin(j*(2*k+1)*pi/(2*n))^2))");
    CHECK(eval_exact(lhs23, {{"n", Q(3)}, {"j", Q(2)}}).to_rational() == Q(8, 3));

    // Empty summation range.
    CHECK(eval_exact(parse("sum(k=1..0, sin(k*pi/5))"), {}).is_zero());
}

TEST_CASE("eval_exact error cases") {
    auto code_of = [](auto&& thunk) {
        try {
            thunk();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::InvalidArgument;
    };

    CHECK(code_of([] { eval_exact(parse("x+1"), {}); }) == Errc::UnboundVariable);
    CHECK(code_of([] { eval_exact(parse("sin(1/3)"), {}); }) == Errc::NonRationalAngle);
    CHECK(code_of([] { eval_exact(parse("1/sin(pi)"), {}); }) == Errc::DivisionByZero);
    CHECK(code_of([] { eval_exact(parse("1/(1-1)"), {}); }) == Errc::DivisionByZero);
    CHECK(code_of([] { eval_exact(parse("sum(k=1..1/2, k)"), {}); }) == Errc::NonIntegerBound);
    CHECK(code_of([] { eval_exact(parse("pi"), {}); }) == Errc::NonAlgebraicValue);
}

TEST_CASE("eval_exact handles pi-linear angle arithmetic") {
    // Angles may be assembled from arbitrary rational arithmetic...
    CHECK(eval_exact(parse("sin(pi/2 - pi/3)"), {}).to_rational() == Q(1, 2));
    CHECK(eval_exact(parse("cos(2*pi*(1/4))"), {}).is_zero());
    // ... and quotients of pure pi-multiples are plain rationals.
    CHECK(eval_exact(parse("(2*pi)/(3*pi)"), {}).to_rational() == Q(2, 3));
    // A nested sine value can itself scale pi: sin(pi/6) * pi = pi/2.
    CHECK(eval_exact(parse("sin(sin(pi/6)*pi)"), {}).to_rational() == 1);
    CHECK(eval_exact(parse("sin(sin(pi/6)*pi + pi/3)"), {}).to_rational() == Q(1, 2));
}

TEST_CASE("generic inversion handles composite denominators") {
    CHECK(eval_exact(parse("1/(1+sin(pi/6))"), {}).to_rational() == Q(2, 3));
    CycloElem v = eval_exact(parse("(1-sin(pi/4))*(1/(1-sin(pi/4)))"), {});
    CHECK(v.to_rational() == 1);
}
