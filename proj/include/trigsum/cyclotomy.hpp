#pragma once

#include <string>
#include <vector>

#include "trigsum/cyclo.hpp"
#include "trigsum/polynomial.hpp"

namespace trigsum {

bool is_prime(long p);

// { a^2 mod p : 1 <= a <= p-1 }, sorted; exactly (p-1)/2 values.
std::vector<long> quadratic_residues(long p);

// g = sum_{a=1}^{p-1} chi(a) zeta_p^a for the quadratic character chi.
// For p = 1 (mod 4), g^2 = p exactly and g is the positive square root
// (pinned by a 30-digit numeric check).
CycloElem gauss_sum_sqrt(long p);

// Integer polynomials with
//   prod_{r QR} (x - zeta_p^r) = (Y(x) - sqrt(p) Z(x)) / 2,
//   prod_{n QNR}(x - zeta_p^n) = (Y(x) + sqrt(p) Z(x)) / 2,
// hence (Y^2 - p Z^2)/4 = 1 + x + ... + x^{p-1}.
struct PeriodPolyPair {
    long p;
    poly::IntPoly Y; // degree (p-1)/2, leading coefficient 2
    poly::IntPoly Z; // degree (p-1)/2 - 1
};

// Expands both factor products with exact cyclotomic coefficients and
// recombines; requires p = 1 (mod 4), p <= 101. Both defining invariants
// are asserted before returning (NonIntegerCoefficient would mean an
// arithmetic bug, not bad input).
PeriodPolyPair period_polynomials(long p);

// The sqrt(13) unit: P is the quotient of the three QNR sines over the
// three QR sines. The certificate pins, all as exact field identities:
//   Q := P^2,  (13 - 3*sqrt13) * Q = 13 + 3*sqrt13,
//   P - 1/P = 3,  (2P - 3)^2 = 13,  P = A + B*sqrt13.
struct UnitCertificate {
    CycloElem P;
    CycloElem Q;
    BigRational A;
    BigRational B;
    std::string note; // records the sign conventions that pin Y, Z and sqrt13
};

// CertificateFailure names the first equation that does not hold.
UnitCertificate verify_unit_identity();

} // namespace trigsum
