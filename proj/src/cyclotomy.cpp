#include "trigsum/cyclotomy.hpp"

#include <algorithm>
#include <set>

#include "trigsum/bigfloat.hpp"
#include "trigsum/error.hpp"

namespace trigsum {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<long> quadratic_residues(long p) {
    if (!is_prime(p) || p == 2)
        throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
    std::set<long> residues;
    for (long a = 1; a < p; ++a) residues.insert(a * a % p);
    return std::vector<long>(residues.begin(), residues.end());
}

CycloElem gauss_sum_sqrt(long p) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p % 4 != 1)
        throw Error(Errc::WrongResidueClass, std::to_string(p) + " is not 1 mod 4");

    auto qr = quadratic_residues(p);
    std::set<long> qr_set(qr.begin(), qr.end());
    ContextPtr ctx = CycloContext::get(p);
    CycloElem g = CycloElem::zero(ctx);
    for (long a = 1; a < p; ++a) {
        CycloElem term = root_of_unity(ctx, a);
        g = qr_set.count(a) ? g + term : g - term;
    }

    CycloElem square = g * g;
    if (square.to_rational() != BigRational(p))
        throw Error(Errc::CertificateFailure, "gauss sum squared is not p");
    // Pin the positive root.
    BigComplex approx = cyclo_to_complex(g, 30);
    if (approx.re < 0) g = -g;
    return g;
}

PeriodPolyPair period_polynomials(long p) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p % 4 != 1)
        throw Error(Errc::WrongResidueClass, std::to_string(p) + " is not 1 mod 4");
    if (p > 101) throw Error(Errc::CapExceeded, "period polynomials capped at p <= 101");

    ContextPtr ctx = CycloContext::get(p);
    auto qr = quadratic_residues(p);
    std::set<long> qr_set(qr.begin(), qr.end());
    std::vector<long> qnr;
    for (long a = 1; a < p; ++a)
        if (!qr_set.count(a)) qnr.push_back(a);

    // prod (x - zeta^a) expanded with exact CycloElem coefficients.
    auto expand = [&](const std::vector<long>& exponents) {
        std::vector<CycloElem> coeffs{CycloElem::from_rational(ctx, BigRational(1))};
        for (long a : exponents) {
            CycloElem root = root_of_unity(ctx, a);
            std::vector<CycloElem> next(coeffs.size() + 1, CycloElem::zero(ctx));
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] = next[i + 1] + coeffs[i];
                next[i] = next[i] - root * coeffs[i];
            }
            coeffs = std::move(next);
        }
        return coeffs;
    };

    std::vector<CycloElem> A = expand(qr);  // (Y - sqrt(p) Z) / 2
    std::vector<CycloElem> B = expand(qnr); // (Y + sqrt(p) Z) / 2

    CycloElem g = gauss_sum_sqrt(p);
    CycloElem g_inv = g * BigRational(1, p); // 1/g = g/p since g^2 = p

    auto rational_int = [](const CycloElem& e, const char* what) {
        BigRational r;
        try {
            r = e.to_rational();
        } catch (const Error&) {
            throw Error(Errc::NonIntegerCoefficient,
                        std::string(what) + " coefficient is not rational");
        }
        if (!is_integer(r))
            throw Error(Errc::NonIntegerCoefficient,
                        std::string(what) + " coefficient is not an integer");
        return numerator(r);
    };

    PeriodPolyPair pair;
    pair.p = p;
    long half = (p - 1) / 2;
    pair.Y.resize(half + 1);
    pair.Z.resize(half);
    for (long i = 0; i <= half; ++i)
        pair.Y[i] = rational_int(A[i] + B[i], "Y");
    for (long i = 0; i < half; ++i)
        pair.Z[i] = rational_int((B[i] - A[i]) * g_inv, "Z");

    // Defining invariant: 2*A == Y - g*Z coefficient-wise.
    for (long i = 0; i <= half; ++i) {
        CycloElem z_term = (i < half) ? g * BigRational(pair.Z[i]) : CycloElem::zero(ctx);
        CycloElem lhs = A[i] * BigRational(2);
        CycloElem rhs = CycloElem::from_rational(ctx, BigRational(pair.Y[i])) - z_term;
        if (lhs != rhs)
            throw Error(Errc::CertificateFailure, "period polynomial split invariant failed");
    }

    // (Y^2 - p Z^2)/4 = 1 + x + ... + x^{p-1} over the integers.
    poly::IntPoly y2 = poly::mul(pair.Y, pair.Y);
    poly::IntPoly z2 = poly::mul(pair.Z, pair.Z);
    poly::IntPoly want(p, BigInt(1));
    if (y2.size() < want.size()) y2.resize(want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        BigInt lhs = y2[i] - (i < z2.size() ? p * z2[i] : BigInt(0));
        if (lhs != 4 * want[i])
            throw Error(Errc::CertificateFailure, "Y^2 - p Z^2 != 4(1 + x + ... + x^{p-1})");
    }

    return pair;
}

UnitCertificate verify_unit_identity() {
    const long M = 52; // lcm(4, 26): the six sines live in Q(zeta_52)
    auto fail = [](const std::string& eq) {
        return Error(Errc::CertificateFailure, "unit identity check failed at " + eq);
    };

    auto sin13 = [](long a) { return sin_pi_rational(BigRational(a, 13)); };
    CycloElem numerator_prod = join_mul(join_mul(sin13(6), sin13(2)), sin13(5));
    CycloElem denominator_prod = join_mul(join_mul(sin13(4), sin13(3)), sin13(1));

    CycloElem P = join_mul(numerator_prod.lift_to_order(M),
                           denominator_prod.lift_to_order(M).inverse());
    CycloElem Q = P * P;

    CycloElem sqrt13 = gauss_sum_sqrt(13).lift_to_order(M);
    CycloElem thirteen = CycloElem::from_rational(P.context(), BigRational(13));
    CycloElem three_g = sqrt13 * BigRational(3);

    // (13 - 3 sqrt13) Q = 13 + 3 sqrt13
    if ((thirteen - three_g) * Q != thirteen + three_g) throw fail("Q*(13-3*sqrt13) = 13+3*sqrt13");

    // P - 1/P = 3
    if (P - P.inverse() != CycloElem::from_rational(P.context(), BigRational(3)))
        throw fail("P - 1/P = 3");

    // (2P - 3)^2 = 13
    CycloElem twoP_minus_3 = P * BigRational(2) - CycloElem::from_rational(P.context(), BigRational(3));
    if (twoP_minus_3 * twoP_minus_3 != thirteen) throw fail("(2P-3)^2 = 13");

    // P = A + B*sqrt13 with rational A, B: (2P-3)^2 = 13 forces
    // P - 3/2 = (+-1/2)*sqrt13, so both coordinates are rational.
    UnitCertificate cert;
    CycloElem shifted = P - CycloElem::from_rational(P.context(), BigRational(3, 2));
    cert.B = (shifted * sqrt13.inverse()).to_rational();
    cert.A = (P - sqrt13 * cert.B).to_rational();
    if (P != CycloElem::from_rational(P.context(), cert.A) + sqrt13 * cert.B)
        throw fail("P = A + B*sqrt13");

    cert.P = P;
    cert.Q = Q;
    cert.note = "sqrt13 is the positive root of the quadratic Gauss sum; "
                "Z is oriented so the quadratic-residue product is (Y - sqrt13*Z)/2";
    return cert;
}

} // namespace trigsum
