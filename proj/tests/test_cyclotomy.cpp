#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "trigsum/bigfloat.hpp"
#include "trigsum/cyclotomy.hpp"
#include "trigsum/error.hpp"

using namespace trigsum;

TEST_CASE("quadratic residues") {
    CHECK(quadratic_residues(13) == std::vector<long>{1, 3, 4, 9, 10, 12});
    CHECK(quadratic_residues(5) == std::vector<long>{1, 4});

    auto qr17 = quadratic_residues(17);
    CHECK(qr17.size() == 8);
    CHECK(std::count(qr17.begin(), qr17.end(), 13) == 1); // 8^2 = 64 = 13 (mod 17)

    CHECK_THROWS_AS(quadratic_residues(12), Error);
    try {
        quadratic_residues(12);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrime);
    }
}

TEST_CASE("gauss sums square to p and pin the positive root") {
    for (long p : {5, 13, 17, 29}) {
        CycloElem g = gauss_sum_sqrt(p);
        CHECK((g * g).to_rational() == BigRational(p));
        BigComplex approx = cyclo_to_complex(g, 30);
        CHECK(approx.re > 0);
        PrecisionGuard guard(40);
        using boost::multiprecision::abs;
        using boost::multiprecision::sqrt;
        CHECK(abs(approx.re - sqrt(BigFloat(p))) < pow10(-25));
        CHECK(abs(approx.im) < pow10(-25));
    }

    CHECK_THROWS_AS(gauss_sum_sqrt(7), Error);
    try {
        gauss_sum_sqrt(7);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::WrongResidueClass);
    }
    CHECK_THROWS_AS(gauss_sum_sqrt(15), Error);
}

TEST_CASE("period polynomials for p = 13 match the published pair") {
    PeriodPolyPair pair = period_polynomials(13);
    // Y = 2x^6 + x^5 + 4x^4 - x^3 + 4x^2 + x + 2, Z = x^5 + x^3 + x
    poly::IntPoly y{BigInt(2), BigInt(1), BigInt(4), BigInt(-1),
                    BigInt(4), BigInt(1), BigInt(2)};
    poly::IntPoly z{BigInt(0), BigInt(1), BigInt(0), BigInt(1), BigInt(0), BigInt(1)};
    CHECK(pair.Y == y);
    CHECK(pair.Z == z);
    CHECK(poly::eval(pair.Y, BigInt(1)) == 13);
    CHECK(poly::eval(pair.Z, BigInt(1)) == 3);
}

TEST_CASE("period polynomials for p = 5") {
    PeriodPolyPair pair = period_polynomials(5);
    CHECK(pair.Y == poly::IntPoly{BigInt(2), BigInt(1), BigInt(2)});
    CHECK(pair.Z == poly::IntPoly{BigInt(0), BigInt(1)});
}

TEST_CASE("factorization and evaluation-at-1 laws") {
    for (long p : {5, 13, 17, 29}) {
        PeriodPolyPair pair = period_polynomials(p);
        // (Y^2 - p Z^2)/4 = 1 + x + ... + x^{p-1} (checked by the builder,
        // re-checked here over the integers)
        poly::IntPoly y2 = poly::mul(pair.Y, pair.Y);
        poly::IntPoly z2 = poly::mul(pair.Z, pair.Z);
        y2.resize(std::max(y2.size(), z2.size()), BigInt(0));
        for (std::size_t i = 0; i < y2.size(); ++i) {
            BigInt v = y2[i] - (i < z2.size() ? p * z2[i] : BigInt(0));
            CHECK(v == (i < static_cast<std::size_t>(p) ? BigInt(4) : BigInt(0)));
        }
        BigInt y1 = poly::eval(pair.Y, BigInt(1));
        BigInt z1 = poly::eval(pair.Z, BigInt(1));
        CHECK(y1 * y1 - p * z1 * z1 == 4 * p);
    }

    CHECK_THROWS_AS(period_polynomials(103), Error); // 103 = 3 mod 4
    CHECK_THROWS_AS(period_polynomials(109), Error); // above the degree cap
}

TEST_CASE("unit certificate") {
    UnitCertificate cert = verify_unit_identity();
    CHECK(cert.A == BigRational(3, 2));
    CHECK(cert.B == BigRational(1, 2));

    // P = (3 + sqrt 13)/2 = 3.302775...
    BigComplex p_value = cyclo_to_complex(cert.P, 30);
    PrecisionGuard guard(40);
    using boost::multiprecision::abs;
    using boost::multiprecision::sqrt;
    CHECK(abs(p_value.re - (3 + sqrt(BigFloat(13))) / 2) < pow10(-25));
    CHECK(abs(p_value.im) < pow10(-25));

    // P - 1/P = 3 and (2P-3)^2 = 13 as exact field identities
    CycloElem three = CycloElem(BigRational(3)).lift_to_order(cert.P.order());
    CHECK(cert.P - cert.P.inverse() == three);
    CycloElem twop3 = cert.P * BigRational(2) - three;
    CHECK((twop3 * twop3).to_rational() == 13);
    CHECK(cert.Q == cert.P * cert.P);
}

TEST_CASE("numerator indices of P are the small non-residues") {
    auto qr = quadratic_residues(13);
    std::set<long> qr_set(qr.begin(), qr.end());
    // P = sin6 sin2 sin5 / (sin4 sin3 sin1): numerator {6,2,5}, denominator {4,3,1}
    for (long idx : {6L, 2L, 5L}) CHECK(qr_set.count(idx) == 0);
    for (long idx : {4L, 3L, 1L}) CHECK(qr_set.count(idx) == 1);
}

TEST_CASE("Q equals the full sine-product quotient") {
    UnitCertificate cert = verify_unit_identity();
    auto qr = quadratic_residues(13);
    std::set<long> qr_set(qr.begin(), qr.end());

    CycloElem num = CycloElem(BigRational(1));
    CycloElem den = CycloElem(BigRational(1));
    for (long a = 1; a <= 12; ++a) {
        CycloElem s = sin_pi_rational(BigRational(a, 13));
        if (qr_set.count(a))
            den = join_mul(den, s);
        else
            num = join_mul(num, s);
    }
    // Q * prod_r sin(r pi/13) = prod_n sin(n pi/13), exactly.
    CHECK(join_sub(join_mul(cert.Q, den), num).is_zero());
}
