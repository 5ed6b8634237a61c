#include "trigsum/catalog.hpp"


#include "trigsum/error.hpp"
#include "trigsum/eval_numeric.hpp"

namespace trigsum {

namespace {

const BigRational& get_param(const ParamMap& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw Error(Errc::MissingParam, "missing parameter '" + name + "'");
    return it->second;
}

bool is_int_param(const ParamMap& p, const std::string& name) {
    return is_integer(get_param(p, name));
}

BigInt int_param(const ParamMap& p, const std::string& name) {
    const BigRational& v = get_param(p, name);
    if (!is_integer(v)) return BigInt(-1); // sentinel; hypotheses reject it
    return numerator(v);
}

using boost::multiprecision::gcd;

bool hyp_t21_t22(const ParamMap& p) {
    BigInt n = int_param(p, "n"), j = int_param(p, "j");
    if (!is_int_param(p, "n") || !is_int_param(p, "j")) return false;
    if (n < 2 || n % 2 != 0) return false;
    if (j < 2 || j % 4 != 2) return false;
    return gcd(BigInt(j / 2), BigInt(n / 2)) == 1;
}

bool hyp_t23(const ParamMap& p) {
    BigInt n = int_param(p, "n"), j = int_param(p, "j");
    if (!is_int_param(p, "n") || !is_int_param(p, "j")) return false;
    if (n < 1 || n % 2 != 1) return false;
    if (j < 2 || j % 2 != 0) return false;
    return gcd(j, n) == 1;
}

bool hyp_t24(const ParamMap& p) {
    BigInt n = int_param(p, "n"), j = int_param(p, "j");
    if (!is_int_param(p, "n") || !is_int_param(p, "j")) return false;
    if (n < 1 || n % 2 != 1) return false;
    if (j < 1) return false;
    if (gcd(j, n) != 1) return false;
    // j(2k+1) stays off the multiples of n across the summation range
    // (coprimality already forces this; checked literally anyway).
    for (BigInt k = 0; 2 * k + 1 < n; ++k)
        if ((j * (2 * k + 1)) % n == 0) return false;
    return true;
}

bool hyp_t32(const ParamMap& p) {
    const BigRational& a = get_param(p, "a");
    const BigRational& b = get_param(p, "b");
    const BigRational& c = get_param(p, "c");
    if (!(a > 0 && b > 0 && c > 0)) return false;
    return is_int_param(p, "k") && int_param(p, "k") >= 1;
}

bool hyp_k_positive(const ParamMap& p) {
    return is_int_param(p, "k") && int_param(p, "k") >= 1;
}

bool hyp_lem_t1(const ParamMap& p) {
    get_param(p, "u");
    get_param(p, "t");
    return true;
}

bool hyp_lem_t3(const ParamMap& p) {
    get_param(p, "x");
    const BigRational& y = get_param(p, "y");
    if (!hyp_k_positive(p)) return false;
    // sin(y*pi/2) must not vanish
    return !(is_integer(y) && numerator(y) % 2 == 0);
}

bool hyp_lem_cos4(const ParamMap& p) {
    get_param(p, "a");
    get_param(p, "b");
    get_param(p, "c");
    get_param(p, "d");
    return true;
}

bool hyp_none(const ParamMap&) { return true; }

IdentityRecord record(std::string id, std::string anchor, std::vector<ParamSpec> params,
                      std::string hypothesis_text, std::string lhs, std::string rhs,
                      std::function<bool(const ParamMap&)> hyp) {
    IdentityRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.params = std::move(params);
    r.hypothesis_text = std::move(hypothesis_text);
    r.lhs_text = std::move(lhs);
    r.rhs_text = std::move(rhs);
    r.lhs = parse(r.lhs_text);
    r.rhs = parse(r.rhs_text);
    r.hypothesis = std::move(hyp);
    return r;
}

std::vector<IdentityRecord> build_catalog() {
    std::vector<IdentityRecord> out;

    out.push_back(record(
        "T21", "integer-node sine-quotient sum, even modulus",
        {{"n", ParamKind::Integer, "even, >= 2"},
         {"j", ParamKind::Integer, "j = 2 (mod 4), gcd(j/2, n/2) = 1"}},
        "n even; j = 2 (mod 4); gcd(j/2, n/2) = 1",
        "sum(k=1..n/2-1, sin((j-1)*k*pi/n)*sin((j+1)*k*pi/n)"
        " / (sin(k*pi/n)^2 * sin(j*k*pi/n)^2))",
        "(n^2-4)/12", hyp_t21_t22));

    out.push_back(record(
        "T22", "half-node sine-quotient sum, even modulus",
        {{"n", ParamKind::Integer, "even, >= 2"},
         {"j", ParamKind::Integer, "j = 2 (mod 4), gcd(j/2, n/2) = 1"}},
        "n even; j = 2 (mod 4); gcd(j/2, n/2) = 1",
        "sum(k=0..n/2-1, sin((j-1)*(2*k+1)*pi/(2*n))*sin((j+1)*(2*k+1)*pi/(2*n))"
        " / (sin((2*k+1)*pi/(2*n))^2 * sin(j*(2*k+1)*pi/(2*n))^2))",
        "n^2/4", hyp_t21_t22));

    out.push_back(record(
        "T23", "half-node sine-quotient sum, odd modulus",
        {{"n", ParamKind::Integer, "odd, >= 1"},
         {"j", ParamKind::Integer, "even, gcd(j, n) = 1"}},
        "n odd; j even; gcd(j, n) = 1",
        "sum(k=0..(n-3)/2, sin((j-1)*(2*k+1)*pi/(2*n))*sin((j+1)*(2*k+1)*pi/(2*n))"
        " / (sin((2*k+1)*pi/(2*n))^2 * sin(j*(2*k+1)*pi/(2*n))^2))",
        "(n^2-1)/3", hyp_t23));

    out.push_back(record(
        "T24", "vanishing sine-quotient sum, odd modulus",
        {{"n", ParamKind::Integer, "odd, >= 1"},
         {"j", ParamKind::Integer, "gcd(j, n) = 1, j(2k+1) never 0 mod n in range"}},
        "n odd; gcd(j, n) = 1; j(2k+1) != 0 (mod n) over the summation range",
        "sum(k=0..(n-3)/2, sin((j-1)*(2*k+1)*pi/n)*sin((j+1)*(2*k+1)*pi/n)"
        " / (sin((2*k+1)*pi/n)^2 * sin(j*(2*k+1)*pi/n)^2))",
        "0", hyp_t24));

    out.push_back(record(
        "T32", "alternating sin^2 partial sum, closed form",
        {{"a", ParamKind::Rational, "> 0"},
         {"b", ParamKind::Rational, "> 0"},
         {"c", ParamKind::Rational, "> 0"},
         {"k", ParamKind::Integer, ">= 1"}},
        "a, b, c positive; k >= 1",
        "sum(j=0..2*k-1, cos(j*pi)*sin((2*j+1)*a*pi/(b*k+c))^2)",
        "-sin(4*a*k*pi/(b*k+c))^2/(2*cos(2*a*pi/(b*k+c)))", hyp_t32));

    out.push_back(record(
        "C31A", "alternating sin^2 sum with limit -1/2",
        {{"k", ParamKind::Integer, ">= 1"}}, "k >= 1",
        "sum(j=0..2*k-1, cos(j*pi)*sin((2*j+1)*pi/(8*k+2))^2)",
        "-sin(4*k*pi/(8*k+2))^2/(2*cos(2*pi/(8*k+2)))", hyp_k_positive));

    out.push_back(record(
        "C31B", "alternating sin^2 sum with limit +1/2",
        {{"k", ParamKind::Integer, ">= 1"}}, "k >= 1",
        "sum(j=0..2*k, cos(j*pi)*sin((2*j+1)*pi/(8*k+6))^2)",
        "-sin(4*k*pi/(8*k+6))^2/(2*cos(2*pi/(8*k+6))) + sin((4*k+1)*pi/(8*k+6))^2",
        hyp_k_positive));

    out.push_back(record(
        "L15", "degree-15 sine-quotient relation L1(15)", {}, "none",
        "sin(2*pi/15)/sin(pi/15) - sin(7*pi/15)/sin(4*pi/15) - sin(3*pi/15)/sin(6*pi/15)",
        "0", hyp_none));

    out.push_back(record(
        "L17A", "degree-17 sine-quotient relation L1(17)", {}, "none",
        "sin(6*pi/17)/sin(3*pi/17) - sin(4*pi/17)/sin(2*pi/17) - sin(8*pi/17)/sin(4*pi/17)"
        " + sin(2*pi/17)/sin(pi/17) + sin(7*pi/17)/sin(5*pi/17) - sin(5*pi/17)/sin(6*pi/17)"
        " + sin(3*pi/17)/sin(7*pi/17) - sin(pi/17)/sin(8*pi/17)",
        "1", hyp_none));

    out.push_back(record(
        "L17B", "degree-17 sine-quotient relation L2(17)", {}, "none",
        "sin(6*pi/17)*sin(7*pi/17)/(sin(3*pi/17)*sin(5*pi/17))"
        " + sin(4*pi/17)*sin(pi/17)/(sin(2*pi/17)*sin(8*pi/17))"
        " - sin(8*pi/17)*sin(2*pi/17)/(sin(4*pi/17)*sin(pi/17))"
        " - sin(5*pi/17)*sin(3*pi/17)/(sin(6*pi/17)*sin(7*pi/17))",
        "-1", hyp_none));

    out.push_back(record(
        "L13A", "degree-13 sine-quotient relation L1(13)", {}, "none",
        "sin(4*pi/13)/sin(2*pi/13) - sin(6*pi/13)/sin(3*pi/13) - sin(2*pi/13)/sin(pi/13)"
        " + sin(5*pi/13)/sin(4*pi/13) - sin(3*pi/13)/sin(5*pi/13) + sin(pi/13)/sin(6*pi/13)",
        "-1", hyp_none));

    out.push_back(record(
        "L13B", "degree-13 sine-quotient relation L2(13)", {}, "none",
        "sin(4*pi/13)*sin(6*pi/13)/(sin(2*pi/13)*sin(3*pi/13))"
        " - sin(2*pi/13)*sin(3*pi/13)/(sin(pi/13)*sin(5*pi/13))"
        " - sin(5*pi/13)*sin(pi/13)/(sin(4*pi/13)*sin(6*pi/13))",
        "1", hyp_none));

    out.push_back(record(
        "L13C", "degree-13 sine-quotient relation L3(13)", {}, "none",
        "sin(2*pi/13)*sin(3*pi/13)/(sin(4*pi/13)*sin(6*pi/13))"
        " - sin(pi/13)*sin(5*pi/13)/(sin(2*pi/13)*sin(3*pi/13))"
        " - sin(4*pi/13)*sin(6*pi/13)/(sin(5*pi/13)*sin(pi/13))",
        "-4", hyp_none));

    out.push_back(record(
        "L13D", "fundamental-unit relation P - 1/P = 3 over sqrt(13)", {}, "none",
        "sin(6*pi/13)*sin(2*pi/13)*sin(5*pi/13)/(sin(4*pi/13)*sin(3*pi/13)*sin(pi/13))"
        " - sin(4*pi/13)*sin(3*pi/13)*sin(pi/13)/(sin(6*pi/13)*sin(2*pi/13)*sin(5*pi/13))",
        "3", hyp_none));

    out.push_back(record(
        "LEM-T1", "sin^2 difference factorization",
        {{"u", ParamKind::Rational, "any"}, {"t", ParamKind::Rational, "any"}}, "none",
        "sin((u+t)*pi)^2 - sin((u-t)*pi)^2", "sin(2*u*pi)*sin(2*t*pi)", hyp_lem_t1));

    out.push_back(record(
        "LEM-T3", "arithmetic-progression sine sum (Gradshteyn-Ryzhik 1.341.1)",
        {{"x", ParamKind::Rational, "any"},
         {"y", ParamKind::Rational, "not an even integer"},
         {"k", ParamKind::Integer, ">= 1"}},
        "sin(y*pi/2) != 0; k >= 1",
        "sum(n=0..k-1, sin((x+n*y)*pi))",
        "sin((x+(k-1)*y/2)*pi)*sin(k*y/2*pi)/sin(y/2*pi)", hyp_lem_t3));

    out.push_back(record(
        "LEM-COS4", "four-cosine product-to-sum expansion",
        {{"a", ParamKind::Rational, "any"},
         {"b", ParamKind::Rational, "any"},
         {"c", ParamKind::Rational, "any"},
         {"d", ParamKind::Rational, "any"}},
        "none",
        "cos(a*pi)*cos(b*pi)*cos(c*pi)*cos(d*pi)",
        "(cos((a+b+c+d)*pi)+cos((a+b+c-d)*pi)+cos((a+b-c+d)*pi)+cos((a+b-c-d)*pi)"
        "+cos((a-b+c+d)*pi)+cos((a-b+c-d)*pi)+cos((a-b-c+d)*pi)+cos((a-b-c-d)*pi))/8",
        hyp_lem_cos4));

    out.push_back(record(
        "LEM-COSPROD", "six-cosine product (Gradshteyn-Ryzhik 1.392.1)", {}, "none",
        "cos(pi/13)*cos(2*pi/13)*cos(3*pi/13)*cos(4*pi/13)*cos(5*pi/13)*cos(6*pi/13)",
        "1/64", hyp_none));

    return out;
}

} // namespace

const std::vector<IdentityRecord>& list_identities() {
    static const std::vector<IdentityRecord> catalog = build_catalog();
    return catalog;
}

const IdentityRecord& find_identity(const std::string& id) {
    for (const auto& rec : list_identities())
        if (rec.id == id) return rec;
    throw Error(Errc::UnknownIdentity, "no identity with id '" + id + "'");
}

bool validate_params(const std::string& id, const ParamMap& params) {
    const IdentityRecord& rec = find_identity(id);
    for (const auto& spec : rec.params)
        get_param(params, spec.name); // MissingParam if absent
    return rec.hypothesis(params);
}

std::pair<ExprPtr, ExprPtr> instantiate(const std::string& id, const ParamMap& params) {
    if (!validate_params(id, params)) {
        throw Error(Errc::HypothesisViolated,
                    "parameters violate the hypotheses of " + id);
    }
    const IdentityRecord& rec = find_identity(id);
    return {substitute(rec.lhs, params), substitute(rec.rhs, params)};
}

const char* to_string(VerifyMode m) { return m == VerifyMode::Exact ? "exact" : "numeric"; }

const char* to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Verified: return "Verified";
        case VerifyStatus::Failed: return "Failed";
        case VerifyStatus::HypothesisViolated: return "HypothesisViolated";
        case VerifyStatus::Error: return "Error";
    }
    return "?";
}

VerificationResult verify_instance(const std::string& id, const ParamMap& params,
                                   VerifyMode mode, unsigned digits, EvalCache* cache) {
    const IdentityRecord& rec = find_identity(id);
    VerificationResult result;
    result.id = id;
    result.params = params;
    result.mode = mode;

    for (const auto& spec : rec.params)
        get_param(params, spec.name); // MissingParam propagates to the caller

    if (!rec.hypothesis(params)) {
        result.status = VerifyStatus::HypothesisViolated;
        return result;
    }

    unsigned display = std::min(digits, 30u);
    try {
        if (mode == VerifyMode::Exact) {
            if (id == "T32" &&
                !(is_int_param(params, "a") && is_int_param(params, "b") &&
                  is_int_param(params, "c")))
                throw Error(Errc::InvalidArgument,
                            "exact mode for T32 requires integer a, b, c; use numeric mode");
            CycloElem lhs = eval_exact(rec.lhs, params, cache);
            CycloElem rhs = eval_exact(rec.rhs, params, cache);
            result.status = (lhs == rhs) ? VerifyStatus::Verified : VerifyStatus::Failed;
            try {
                result.lhs_exact = lhs.to_rational().str();
            } catch (const Error&) {
            }
            try {
                result.rhs_exact = rhs.to_rational().str();
            } catch (const Error&) {
            }
            result.lhs_decimal = to_decimal_string(cyclo_to_complex(lhs, display), display);
            result.rhs_decimal = to_decimal_string(cyclo_to_complex(rhs, display), display);
        } else {
            std::map<std::string, BigFloat> bindings;
            {
                PrecisionGuard guard(digits + 15);
                for (const auto& [k, v] : params) bindings.emplace(k, to_bigfloat(v));
            }
            BigComplex lhs = eval_numeric(rec.lhs, bindings, digits);
            BigComplex rhs = eval_numeric(rec.rhs, bindings, digits);
            PrecisionGuard guard(digits + 15);
            BigFloat diff = abs(lhs - rhs);
            BigFloat tol = pow10(10 - static_cast<long>(digits));
            result.status = (diff < tol) ? VerifyStatus::Verified : VerifyStatus::Failed;
            result.lhs_decimal = to_decimal_string(lhs, display);
            result.rhs_decimal = to_decimal_string(rhs, display);
            result.abs_diff = diff.str(8);
        }
    } catch (const Error& e) {
        result.status = VerifyStatus::Error;
        result.message = e.what();
    }
    return result;
}

BigFloat conjecture_deviation(long k, const std::string& which, unsigned digits) {
    if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
    bool first = (which == "C31A");
    if (!first && which != "C31B")
        throw Error(Errc::UnknownIdentity, "conjecture id must be C31A or C31B");

    PrecisionGuard guard(digits + 15);
    using boost::multiprecision::abs;
    using boost::multiprecision::cos;
    using boost::multiprecision::sin;

    BigFloat pi = pi_value();
    BigFloat m(first ? 8 * k + 2 : 8 * k + 6);
    BigFloat s4 = sin(4 * k * pi / m);
    BigFloat closed = -(s4 * s4) / (2 * cos(2 * pi / m));
    if (first) return abs(closed + BigFloat(1) / 2);

    BigFloat extra = sin((4 * k + 1) * pi / m);
    return abs(closed + extra * extra - BigFloat(1) / 2);
}

std::vector<long> admissible_j(const std::string& id, long n) {
    if (id != "T21" && id != "T22" && id != "T23" && id != "T24")
        throw Error(Errc::InvalidArgument, "identity " + id + " has no j parameter to sweep");
    std::vector<long> out;
    for (long j = 1; j < 2 * n; ++j) {
        ParamMap p{{"n", BigRational(n)}, {"j", BigRational(j)}};
        if (find_identity(id).hypothesis(p)) out.push_back(j);
    }
    return out;
}

} // namespace trigsum
