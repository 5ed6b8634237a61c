#include "trigsum/quadrature.hpp"

#include <map>
#include <mutex>

#include <boost/math/constants/constants.hpp>

#include "trigsum/error.hpp"

namespace trigsum {

namespace {

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<BigFloat, BigFloat> legendre_with_derivative(unsigned n, const BigFloat& x) {
    BigFloat p0 = 1, p1 = x;
    for (unsigned k = 2; k <= n; ++k) {
        BigFloat p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    BigFloat deriv = n * (x * p1 - p0) / (x * x - 1);
    return {p1, deriv};
}

GLRule compute_rule(unsigned order, unsigned digits) {
    PrecisionGuard guard(digits + 10);
    using boost::multiprecision::abs;
    using boost::multiprecision::cos;
    GLRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    BigFloat pi = boost::math::constants::pi<BigFloat>();
    BigFloat eps = pow10(-static_cast<long>(digits) - 5);
    for (unsigned i = 0; i < (order + 1) / 2; ++i) {
        BigFloat x = cos(pi * (BigFloat(i) + BigFloat(3) / 4) / (BigFloat(order) + BigFloat(1) / 2));
        BigFloat dx = 1;
        for (int iter = 0; iter < 200 && abs(dx) > eps; ++iter) {
            auto [p, dp] = legendre_with_derivative(order, x);
            dx = -p / dp;
            x += dx;
        }
        auto [p, dp] = legendre_with_derivative(order, x);
        (void)p;
        BigFloat w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[order - 1 - i] = x;
        rule.weights[order - 1 - i] = w;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
    }
    return rule;
}

std::mutex rule_mutex;

} // namespace

const GLRule& gauss_legendre(unsigned order, unsigned digits) {
    static std::map<std::pair<unsigned, unsigned>, GLRule> cache;
    std::lock_guard<std::mutex> lock(rule_mutex);
    auto key = std::make_pair(order, digits);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_rule(order, digits)).first;
    return it->second;
}

BigComplex integrate_panels(const std::function<BigComplex(const BigFloat&)>& f,
                            const BigFloat& a, const BigFloat& b, long panels,
                            const GLRule& rule) {
    if (panels < 1) throw Error(Errc::InvalidArgument, "panel count must be positive");
    BigFloat width = (b - a) / panels;
    BigFloat half = width / 2;
    BigComplex total;
    for (long p = 0; p < panels; ++p) {
        BigFloat mid = a + width * p + half;
        BigComplex acc;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += f(mid + half * rule.nodes[i]) * rule.weights[i];
        total += acc * half;
    }
    return total;
}

} // namespace trigsum
