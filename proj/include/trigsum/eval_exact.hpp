#pragma once

#include <map>
#include <string>

#include "trigsum/cyclo.hpp"
#include "trigsum/expr.hpp"

namespace trigsum {

// Memo for sine/cosine atoms and their inverses, keyed by the angle
// reduced mod 2. A parameter sweep at fixed n revisits the same few
// hundred angles thousands of times; sharing one cache across the sweep
// keeps the exact backend desk-scale. Not for concurrent sharing.
class EvalCache {
public:
    const CycloElem& sin(const BigRational& r);
    const CycloElem& cos(const BigRational& r);
    const CycloElem& inv_sin(const BigRational& r);
    const CycloElem& inv_cos(const BigRational& r);

private:
    std::map<BigRational, CycloElem> sin_, cos_, inv_sin_, inv_cos_;
};

// Evaluates an expression to an exact element of one cyclotomic field.
// Every free variable must be bound to a rational; every sin/cos argument
// must reduce, after binding, to (rational)*pi; summation bounds must land
// on integers, with empty ranges summing to 0. The working field ends up
// being Q(zeta_M) for M = lcm(4, 2*lcm of the angle denominators), built
// up by lifting as angles are encountered.
CycloElem eval_exact(const ExprPtr& expr, const std::map<std::string, BigRational>& bindings,
                     EvalCache* cache = nullptr);

} // namespace trigsum
