#pragma once

#include <functional>
#include <vector>

#include "trigsum/bigfloat.hpp"

namespace trigsum {

// Gauss-Legendre rule on [-1, 1], nodes/weights computed by Newton
// iteration at the requested precision and cached per (order, digits).
struct GLRule {
    std::vector<BigFloat> nodes;
    std::vector<BigFloat> weights;
};

const GLRule& gauss_legendre(unsigned order, unsigned digits);

// Composite rule: `panels` equal subintervals of [a, b].
BigComplex integrate_panels(const std::function<BigComplex(const BigFloat&)>& f,
                            const BigFloat& a, const BigFloat& b, long panels,
                            const GLRule& rule);

} // namespace trigsum
