#include "trigsum/kernels.hpp"

#include <algorithm>

#include "trigsum/error.hpp"
#include "trigsum/quadrature.hpp"

namespace trigsum {

KernelSpec make_kernel(KernelId id, long n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "kernel requires n >= 1");
    bool even = (n % 2 == 0);
    if ((id == KernelId::HH2 || id == KernelId::HH7) && !even)
        throw Error(Errc::HypothesisViolated,
                    std::string(kernel_name(id)) + " requires even n, got " + std::to_string(n));
    if (id == KernelId::HH12 && even)
        throw Error(Errc::HypothesisViolated,
                    "hh12 requires odd n, got " + std::to_string(n));
    return KernelSpec{id, n, 2};
}

const char* kernel_name(KernelId id) {
    switch (id) {
        case KernelId::HH2: return "hh2";
        case KernelId::HH7: return "hh7";
        case KernelId::HH12: return "hh12";
    }
    return "?";
}

std::optional<KernelId> kernel_from_name(std::string_view name) {
    if (name == "hh2" || name == "HH2") return KernelId::HH2;
    if (name == "hh7" || name == "HH7") return KernelId::HH7;
    if (name == "hh12" || name == "HH12") return KernelId::HH12;
    return std::nullopt;
}

BigComplex kernel_eval(const KernelSpec& spec, const BigComplex& z) {
    BigFloat pi = pi_value();
    BigFloat n(spec.n);
    BigComplex w = z * (pi / n);
    BigComplex s1 = csin(w);
    BigComplex s2 = csin(w * BigFloat(2));
    BigComplex s3 = csin(w * BigFloat(3));
    BigComplex ez = cexp(BigComplex(BigFloat(0), BigFloat(2) * pi) * z);
    BigComplex efactor = (spec.id == KernelId::HH2)
                             ? ez - BigComplex(BigFloat(1))
                             : ez + BigComplex(BigFloat(1));
    BigComplex den = s1 * s2 * s2 * efactor;
    // A quadrature node sitting on a pole shows up as a denominator far
    // below anything the working precision can produce legitimately.
    BigFloat floor = pow10(-2 * static_cast<long>(BigFloat::default_precision()));
    if (abs(den) < floor)
        throw Error(Errc::PoleOnGrid, "kernel evaluated on (or too close to) a pole");
    return s3 / den;
}

int pole_order(const KernelSpec& spec, const BigRational& a) {
    auto is_int = [](const BigRational& q) { return is_integer(q); };
    BigRational an(a / spec.n);
    int den_order = 0;
    if (is_int(an)) den_order += 1;                    // sin(pi z/n)
    if (is_int(an * 2)) den_order += 2;                // sin^2(2 pi z/n)
    if (spec.id == KernelId::HH2) {
        if (is_int(a)) den_order += 1;                 // e^{2 pi i z} - 1
    } else {
        if (is_int(a - BigRational(1, 2))) den_order += 1; // e^{2 pi i z} + 1
    }
    int num_order = is_int(an * 3) ? 1 : 0;            // sin(3 pi z/n)
    return std::max(den_order - num_order, 0);
}

std::vector<PoleInfo> enclosed_poles(const KernelSpec& spec) {
    std::vector<PoleInfo> poles;
    auto consider = [&](const BigRational& a) {
        int ord = pole_order(spec, a);
        if (ord > 0) poles.push_back({a, ord});
    };
    if (spec.id == KernelId::HH2) {
        for (long k = 0; k < spec.n; ++k) consider(BigRational(k));
    } else {
        consider(BigRational(0));
        if (spec.n % 2 == 0) consider(BigRational(spec.n, 2));
        for (long k = 0; k < spec.n; ++k) consider(BigRational(2 * k + 1, 2));
    }
    std::sort(poles.begin(), poles.end(),
              [](const PoleInfo& x, const PoleInfo& y) { return x.location < y.location; });
    poles.erase(std::unique(poles.begin(), poles.end(),
                            [](const PoleInfo& x, const PoleInfo& y) {
                                return x.location == y.location;
                            }),
                poles.end());
    return poles;
}

ResidueResult residue_2pii(const KernelSpec& spec, const BigRational& pole,
                           const BigFloat& radius, long points, unsigned digits) {
    if (digits < 10) throw Error(Errc::InvalidArgument, "digits must be >= 10");
    if (points < 16 || (points & (points - 1)) != 0)
        throw Error(Errc::InvalidArgument, "points must be a power of 2, at least 16");

    PrecisionGuard guard(digits + 15);
    BigFloat r(radius);
    if (!(r > 0) || r > BigFloat(1) / 4)
        throw Error(Errc::InvalidArgument, "radius must lie in (0, 1/4]");

    BigFloat a = to_bigfloat(pole);
    BigFloat two_pi = 2 * pi_value();
    BigFloat tol = pow10(10 - static_cast<long>(digits));

    // g(theta) = f(a + r e^{i theta}) * r e^{i theta}; the contour integral
    // over the circle is (2 pi i / M) * sum g(theta_k). Old nodes stay
    // valid when M doubles, so only the odd positions are new.
    auto g = [&](const BigFloat& theta) {
        using boost::multiprecision::cos;
        using boost::multiprecision::sin;
        BigComplex offset(r * cos(theta), r * sin(theta));
        BigComplex z(a + offset.re, offset.im);
        return kernel_eval(spec, z) * offset;
    };

    const long max_points = 1 << 20;
    long m = points;
    BigComplex node_sum;
    for (long k = 0; k < m; ++k) node_sum += g(two_pi * BigFloat(k) / BigFloat(m));

    auto value_of = [&](const BigComplex& sum, long count) {
        BigComplex i_factor(BigFloat(0), two_pi / BigFloat(count));
        return i_factor * sum;
    };

    BigComplex value = value_of(node_sum, m);
    while (true) {
        if (2 * m > max_points)
            throw Error(Errc::NoConvergence,
                        "residue quadrature did not converge by M = " + std::to_string(m));
        for (long k = 0; k < m; ++k)
            node_sum += g(two_pi * BigFloat(2 * k + 1) / BigFloat(2 * m));
        m *= 2;
        BigComplex refined = value_of(node_sum, m);
        BigFloat delta = abs(refined - value);
        value = refined;
        if (delta <= tol)
            return ResidueResult{pole, pole_order(spec, pole), value, m, delta};
    }
}

BigComplex rectangle_contour_integral(const KernelSpec& spec, const BigFloat& height,
                                      unsigned digits) {
    if (digits < 10) throw Error(Errc::InvalidArgument, "digits must be >= 10");
    if (!(height >= 1)) throw Error(Errc::InvalidArgument, "height must be >= 1");

    PrecisionGuard guard(digits + 15);
    BigFloat N(height);
    BigFloat x_left = BigFloat(-1) / 4;
    BigFloat x_right = BigFloat(spec.n) - BigFloat(1) / 4;
    const GLRule& rule = gauss_legendre(32, digits + 15);

    auto total_at = [&](long mult) {
        long vertical_panels = mult * std::max(2L, 2 * static_cast<long>(std::ceil(
                                                        static_cast<double>(N))));
        long horizontal_panels = mult * std::max(2L, spec.n);

        BigComplex i_unit(BigFloat(0), BigFloat(1));
        // right side, upward
        BigComplex right = integrate_panels(
                               [&](const BigFloat& t) {
                                   return kernel_eval(spec, BigComplex(x_right, t));
                               },
                               -N, N, vertical_panels, rule) *
                           i_unit;
        // left side, downward
        BigComplex left = integrate_panels(
                              [&](const BigFloat& t) {
                                  return kernel_eval(spec, BigComplex(x_left, t));
                              },
                              -N, N, vertical_panels, rule) *
                          i_unit;
        // top, right-to-left; bottom, left-to-right
        BigComplex top = integrate_panels(
            [&](const BigFloat& t) { return kernel_eval(spec, BigComplex(t, N)); }, x_left,
            x_right, horizontal_panels, rule);
        BigComplex bottom = integrate_panels(
            [&](const BigFloat& t) { return kernel_eval(spec, BigComplex(t, -N)); }, x_left,
            x_right, horizontal_panels, rule);
        return right - left - top + bottom;
    };

    BigFloat tol = pow10(-static_cast<long>(digits) - 5);
    BigComplex value = total_at(1);
    for (long mult = 2; mult <= 64; mult *= 2) {
        BigComplex refined = total_at(mult);
        BigFloat delta = abs(refined - value);
        value = refined;
        if (delta <= tol) return value;
    }
    throw Error(Errc::NoConvergence, "rectangle contour integral did not converge");
}

} // namespace trigsum
