#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "trigsum/bigfloat.hpp"
#include "trigsum/rational.hpp"

namespace trigsum {

// The meromorphic integrands behind the contour proofs:
//
//   f(z) = sin(3*pi*z/n) / ( sin(pi*z/n) * sin^2(2*pi*z/n) * (e^{2*pi*i*z} -+ 1) )
//
// HH2 carries (e^{2*pi*i*z} - 1) and needs n even; HH7 carries the +1
// variant for even n, HH12 the same +1 variant for odd n (the pole
// structure differs, the formula does not). j is fixed to 2, the value
// every proof reduces to.
enum class KernelId { HH2, HH7, HH12 };

struct KernelSpec {
    KernelId id;
    long n;
    long j = 2;
};

// Validates the parity constraint (HypothesisViolated otherwise).
KernelSpec make_kernel(KernelId id, long n);

const char* kernel_name(KernelId id);
std::optional<KernelId> kernel_from_name(std::string_view name);

// PoleOnGrid when z lands on a pole of f.
BigComplex kernel_eval(const KernelSpec& spec, const BigComplex& z);

struct PoleInfo {
    BigRational location;
    int order;
};

// Poles inside the period strip -1/4 <= Re z < n - 1/4, ascending.
std::vector<PoleInfo> enclosed_poles(const KernelSpec& spec);

// Pole order at a rational point from the factor structure (0 if regular).
int pole_order(const KernelSpec& spec, const BigRational& a);

struct ResidueResult {
    BigRational pole;
    int assumed_order;
    BigComplex value; // reported as 2*pi*i*R to match the closed forms
    long points_used;
    BigFloat convergence; // |last doubling - previous|
};

// Trapezoid rule on the circle |z - pole| = radius, doubled until two
// successive refinements agree to 10^(10-digits); spectrally accurate.
// Requires 0 < radius <= 1/4 and points a power of two >= 16.
ResidueResult residue_2pii(const KernelSpec& spec, const BigRational& pole,
                           const BigFloat& radius, long points, unsigned digits);

// Integral of f over the positively oriented rectangle with vertical
// sides at x = -1/4 and x = n - 1/4 and horizontal sides at -+i*height.
// The vertical sides cancel by n-periodicity, so the value decays like
// e^{-2*pi*height}; composite Gauss-Legendre panels, doubled to
// convergence.
BigComplex rectangle_contour_integral(const KernelSpec& spec, const BigFloat& height,
                                      unsigned digits);

} // namespace trigsum
