#include "trigsum/eval_numeric.hpp"

#include <optional>

#include "trigsum/error.hpp"

namespace trigsum {

namespace {

class NumericEvaluator {
public:
    NumericEvaluator(const std::map<std::string, BigFloat>& bindings, unsigned digits)
        : env_(bindings), digits_(digits), zero_tol_(pow10(-static_cast<long>(digits))) {}

    BigComplex eval(const ExprPtr& e) {
        switch (e->kind) {
            case ExprKind::Rational:
                return BigComplex(to_bigfloat(e->value));
            case ExprKind::Pi:
                return BigComplex(pi_value());
            case ExprKind::Var: {
                auto it = env_.find(e->name);
                if (it == env_.end())
                    throw Error(Errc::UnboundVariable, "unbound variable '" + e->name + "'");
                return BigComplex(it->second);
            }
            case ExprKind::Add:
                return eval(e->children[0]) + eval(e->children[1]);
            case ExprKind::Sub:
                return eval(e->children[0]) - eval(e->children[1]);
            case ExprKind::Mul:
                return eval(e->children[0]) * eval(e->children[1]);
            case ExprKind::Div: {
                BigComplex den = eval(e->children[1]);
                if (abs(den) < zero_tol_)
                    throw Error(Errc::DivisionByZero, "denominator vanishes numerically");
                return eval(e->children[0]) / den;
            }
            case ExprKind::Neg:
                return -eval(e->children[0]);
            case ExprKind::Pow:
                return cpow(eval(e->children[0]), e->exponent);
            case ExprKind::Sin:
                return csin(eval(e->children[0]));
            case ExprKind::Cos:
                return ccos(eval(e->children[0]));
            case ExprKind::Sum:
                return eval_sum(e);
        }
        throw Error(Errc::InvalidArgument, "unknown expression node");
    }

private:
    BigComplex cpow(const BigComplex& base, long e) {
        if (e == 0) return BigComplex(BigFloat(1));
        if (e < 0) {
            if (abs(base) < zero_tol_)
                throw Error(Errc::DivisionByZero, "negative power of a vanishing value");
            return BigComplex(BigFloat(1)) / cpow(base, -e);
        }
        BigComplex acc{BigFloat(1), BigFloat(0)};
        BigComplex b = base;
        long n = e;
        while (n > 0) {
            if (n & 1) acc = acc * b;
            n >>= 1;
            if (n > 0) b = b * b;
        }
        return acc;
    }

    long integer_bound(const BigComplex& v, const char* which) {
        using boost::multiprecision::abs;
        using boost::multiprecision::round;
        if (abs(v.im) > zero_tol_)
            throw Error(Errc::NonIntegerBound,
                        std::string("summation ") + which + " bound is not real");
        BigFloat r = round(v.re);
        if (abs(v.re - r) > zero_tol_)
            throw Error(Errc::NonIntegerBound,
                        std::string("summation ") + which + " bound is not an integer");
        return static_cast<long>(r);
    }

    BigComplex eval_sum(const ExprPtr& e) {
        long lo = integer_bound(eval(e->children[0]), "lower");
        long hi = integer_bound(eval(e->children[1]), "upper");
        BigComplex acc;
        if (lo > hi) return acc;

        auto saved = env_.find(e->name);
        std::optional<BigFloat> previous;
        if (saved != env_.end()) previous = saved->second;

        for (long k = lo; k <= hi; ++k) {
            env_[e->name] = BigFloat(k);
            acc += eval(e->children[2]);
        }

        if (previous)
            env_[e->name] = *previous;
        else
            env_.erase(e->name);
        return acc;
    }

    std::map<std::string, BigFloat> env_;
    unsigned digits_;
    BigFloat zero_tol_;
};

} // namespace

BigComplex eval_numeric(const ExprPtr& expr, const std::map<std::string, BigFloat>& bindings,
                        unsigned digits) {
    if (digits < 10) throw Error(Errc::InvalidArgument, "digits must be >= 10");
    PrecisionGuard guard(digits + 15);
    // Re-round the inputs at working precision.
    std::map<std::string, BigFloat> env;
    for (const auto& [k, v] : bindings) env.emplace(k, BigFloat(v));
    return NumericEvaluator(env, digits).eval(expr);
}

} // namespace trigsum
