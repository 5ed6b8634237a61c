#include "trigsum/eval_exact.hpp"

#include <optional>

#include "trigsum/error.hpp"

namespace trigsum {

namespace {

BigRational normalize_angle(const BigRational& r) {
    // sin((r+2)pi) = sin(r_pi), cos likewise; fold into [0, 2).
    using boost::multiprecision::abs;
    BigInt num = numerator(r), den = denominator(r);
    BigInt two_den = 2 * den;
    BigInt rem = num % two_den;
    if (rem < 0) rem += two_den;
    return make_rational(rem, den);
}

} // namespace

const CycloElem& EvalCache::sin(const BigRational& r) {
    BigRational key = normalize_angle(r);
    auto it = sin_.find(key);
    if (it == sin_.end()) it = sin_.emplace(key, sin_pi_rational(key)).first;
    return it->second;
}

const CycloElem& EvalCache::cos(const BigRational& r) {
    BigRational key = normalize_angle(r);
    auto it = cos_.find(key);
    if (it == cos_.end()) it = cos_.emplace(key, cos_pi_rational(key)).first;
    return it->second;
}

const CycloElem& EvalCache::inv_sin(const BigRational& r) {
    BigRational key = normalize_angle(r);
    auto it = inv_sin_.find(key);
    if (it == inv_sin_.end()) it = inv_sin_.emplace(key, inv_sin_pi_rational(key)).first;
    return it->second;
}

const CycloElem& EvalCache::inv_cos(const BigRational& r) {
    BigRational key = normalize_angle(r);
    auto it = inv_cos_.find(key);
    if (it == inv_cos_.end()) it = inv_cos_.emplace(key, inv_cos_pi_rational(key)).first;
    return it->second;
}

namespace {

// Values are Laurent polynomials in pi over the cyclotomic field: pi is
// transcendental, so keeping its powers symbolic is what lets the
// evaluator decide "argument is (rational)*pi" syntactically after
// constant folding.
using Value = std::map<long, CycloElem>;

void prune(Value& v) {
    for (auto it = v.begin(); it != v.end();)
        it = it->second.is_zero() ? v.erase(it) : std::next(it);
}

Value vrational(const BigRational& r) {
    Value v;
    if (r != 0) v.emplace(0, CycloElem(r));
    return v;
}

Value velem(const CycloElem& e) {
    Value v;
    if (!e.is_zero()) v.emplace(0, e);
    return v;
}

Value vadd(const Value& a, const Value& b) {
    Value out = a;
    for (const auto& [k, c] : b) {
        auto it = out.find(k);
        if (it == out.end())
            out.emplace(k, c);
        else
            it->second = join_add(it->second, c);
    }
    prune(out);
    return out;
}

Value vneg(const Value& a) {
    Value out;
    for (const auto& [k, c] : a) out.emplace(k, -c);
    return out;
}

Value vsub(const Value& a, const Value& b) { return vadd(a, vneg(b)); }

Value vmul(const Value& a, const Value& b) {
    Value out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            CycloElem prod = join_mul(ca, cb);
            auto it = out.find(ka + kb);
            if (it == out.end())
                out.emplace(ka + kb, std::move(prod));
            else
                it->second = join_add(it->second, prod);
        }
    }
    prune(out);
    return out;
}

// Inverse of a monomial c*pi^k; anything else has no Laurent inverse.
Value vinvert(const Value& a) {
    if (a.empty()) throw Error(Errc::DivisionByZero, "division by zero value");
    if (a.size() != 1)
        throw Error(Errc::NonAlgebraicValue, "cannot invert a value mixing powers of pi");
    const auto& [k, c] = *a.begin();
    Value out;
    out.emplace(-k, c.inverse());
    return out;
}

Value vpow(const Value& a, long e) {
    if (e == 0) return vrational(1);
    if (e < 0) return vpow(vinvert(a), -e);
    if (a.empty()) return {};
    if (a.size() == 1) {
        const auto& [k, c] = *a.begin();
        Value out;
        out.emplace(k * e, c.pow(e));
        prune(out);
        return out;
    }
    Value acc = vrational(1);
    Value base = a;
    long n = e;
    while (n > 0) {
        if (n & 1) acc = vmul(acc, base);
        n >>= 1;
        if (n > 0) base = vmul(base, base);
    }
    return acc;
}

class ExactEvaluator {
public:
    ExactEvaluator(const std::map<std::string, BigRational>& bindings, EvalCache* cache)
        : env_(bindings), cache_(cache ? cache : &local_) {}

    CycloElem run(const ExprPtr& e) {
        Value v = eval(e);
        if (v.empty()) return CycloElem(BigRational(0));
        if (v.size() == 1 && v.begin()->first == 0) return v.begin()->second;
        throw Error(Errc::NonAlgebraicValue, "result is not a cyclotomic field element");
    }

private:
    // The angle of a sin/cos: the value must be exactly (rational)*pi.
    BigRational angle_of(const Value& v) {
        if (v.empty()) return BigRational(0);
        if (v.size() == 1 && v.begin()->first == 1) {
            try {
                return v.begin()->second.to_rational();
            } catch (const Error&) {
                throw Error(Errc::NonRationalAngle,
                            "sin/cos argument has a non-rational pi coefficient");
            }
        }
        throw Error(Errc::NonRationalAngle,
                    "sin/cos argument is not a rational multiple of pi");
    }

    BigRational bound_of(const Value& v, const char* which) {
        if (v.empty()) return BigRational(0);
        if (v.size() == 1 && v.begin()->first == 0) {
            try {
                BigRational r = v.begin()->second.to_rational();
                if (is_integer(r)) return r;
            } catch (const Error&) {
            }
        }
        throw Error(Errc::NonIntegerBound,
                    std::string("summation ") + which + " bound is not an integer");
    }

    Value eval(const ExprPtr& e) {
        switch (e->kind) {
            case ExprKind::Rational:
                return vrational(e->value);
            case ExprKind::Pi: {
                Value v;
                v.emplace(1, CycloElem(BigRational(1)));
                return v;
            }
            case ExprKind::Var: {
                auto it = env_.find(e->name);
                if (it == env_.end())
                    throw Error(Errc::UnboundVariable, "unbound variable '" + e->name + "'");
                return vrational(it->second);
            }
            case ExprKind::Add:
                return vadd(eval(e->children[0]), eval(e->children[1]));
            case ExprKind::Sub:
                return vsub(eval(e->children[0]), eval(e->children[1]));
            case ExprKind::Mul:
                return vmul(eval(e->children[0]), eval(e->children[1]));
            case ExprKind::Div:
                return vmul(eval(e->children[0]), eval_inverse(e->children[1]));
            case ExprKind::Neg:
                return vneg(eval(e->children[0]));
            case ExprKind::Pow:
                if (e->exponent < 0) return vpow(eval_inverse(e->children[0]), -e->exponent);
                return vpow(eval(e->children[0]), e->exponent);
            case ExprKind::Sin:
                return velem(cache_->sin(angle_of(eval(e->children[0]))));
            case ExprKind::Cos:
                return velem(cache_->cos(angle_of(eval(e->children[0]))));
            case ExprKind::Sum:
                return eval_sum(e);
        }
        throw Error(Errc::InvalidArgument, "unknown expression node");
    }

    // 1/e with the factor structure of e intact, so quotients of sines use
    // the closed-form inverses instead of a Euclidean inversion per term.
    Value eval_inverse(const ExprPtr& e) {
        switch (e->kind) {
            case ExprKind::Mul:
                return vmul(eval_inverse(e->children[0]), eval_inverse(e->children[1]));
            case ExprKind::Div:
                return vmul(eval_inverse(e->children[0]), eval(e->children[1]));
            case ExprKind::Neg:
                return vneg(eval_inverse(e->children[0]));
            case ExprKind::Pow:
                if (e->exponent < 0) return vpow(eval(e->children[0]), -e->exponent);
                return vpow(eval_inverse(e->children[0]), e->exponent);
            case ExprKind::Sin:
                return velem(cache_->inv_sin(angle_of(eval(e->children[0]))));
            case ExprKind::Cos:
                return velem(cache_->inv_cos(angle_of(eval(e->children[0]))));
            case ExprKind::Rational:
                if (e->value == 0) throw Error(Errc::DivisionByZero, "division by zero literal");
                return vrational(1 / e->value);
            default:
                return vinvert(eval(e));
        }
    }

    Value eval_sum(const ExprPtr& e) {
        BigRational lo = bound_of(eval(e->children[0]), "lower");
        BigRational hi = bound_of(eval(e->children[1]), "upper");
        Value acc;
        if (lo > hi) return acc; // empty range
        BigInt span = numerator(hi) - numerator(lo);
        if (span > 2000000)
            throw Error(Errc::InvalidArgument, "summation range too large: " + span.str());

        auto saved = env_.find(e->name);
        std::optional<BigRational> previous;
        if (saved != env_.end()) previous = saved->second;

        for (BigInt k = numerator(lo); k <= numerator(hi); ++k) {
            env_[e->name] = BigRational(k);
            acc = vadd(acc, eval(e->children[2]));
        }

        if (previous)
            env_[e->name] = *previous;
        else
            env_.erase(e->name);
        return acc;
    }

    std::map<std::string, BigRational> env_;
    EvalCache* cache_;
    EvalCache local_;
};

} // namespace

CycloElem eval_exact(const ExprPtr& expr, const std::map<std::string, BigRational>& bindings,
                     EvalCache* cache) {
    return ExactEvaluator(bindings, cache).run(expr);
}

} // namespace trigsum
