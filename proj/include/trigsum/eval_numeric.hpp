#pragma once

#include <map>
#include <string>

#include "trigsum/bigfloat.hpp"
#include "trigsum/expr.hpp"

namespace trigsum {

// Arbitrary-precision twin of eval_exact for parameters that are not
// rational multiples of pi. Works internally at digits+15 so the result
// is good to ~10^(-digits+5). Division by a value of magnitude below
// 10^(-digits) reports DivisionByZero.
BigComplex eval_numeric(const ExprPtr& expr, const std::map<std::string, BigFloat>& bindings,
                        unsigned digits);

} // namespace trigsum
