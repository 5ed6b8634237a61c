#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigsum/bigfloat.hpp"
#include "trigsum/eval_exact.hpp"
#include "trigsum/expr.hpp"

namespace trigsum {

using ParamMap = std::map<std::string, BigRational>;

enum class ParamKind { Integer, Rational };

struct ParamSpec {
    std::string name;
    ParamKind kind;
    std::string domain;
};

// One catalog identity: hypothesis predicate on the parameters plus both
// sides as DSL expressions. The catalog is append-only and ids are frozen.
struct IdentityRecord {
    std::string id;
    std::string anchor;
    std::vector<ParamSpec> params;
    std::string hypothesis_text;
    std::string lhs_text;
    std::string rhs_text;
    ExprPtr lhs;
    ExprPtr rhs;
    std::function<bool(const ParamMap&)> hypothesis;
};

// All 18 records, stable ids and ordering.
const std::vector<IdentityRecord>& list_identities();
const IdentityRecord& find_identity(const std::string& id); // UnknownIdentity

// True iff the hypotheses hold. MissingParam / UnknownIdentity on bad input.
bool validate_params(const std::string& id, const ParamMap& params);

// Both sides with the parameters substituted in; HypothesisViolated unless
// validate_params passes.
std::pair<ExprPtr, ExprPtr> instantiate(const std::string& id, const ParamMap& params);

enum class VerifyMode { Exact, Numeric };
enum class VerifyStatus { Verified, Failed, HypothesisViolated, Error };

const char* to_string(VerifyMode m);
const char* to_string(VerifyStatus s);

struct VerificationResult {
    std::string id;
    ParamMap params;
    VerifyMode mode = VerifyMode::Exact;
    VerifyStatus status = VerifyStatus::Error;
    std::string lhs_decimal;
    std::string rhs_decimal;
    std::optional<std::string> lhs_exact; // rational string when the value is rational
    std::optional<std::string> rhs_exact;
    std::string abs_diff; // numeric mode only
    std::string message;  // diagnostic for status Error
};

// Exact mode: Verified means lhs - rhs is the zero field element.
// Numeric mode: Verified means |lhs - rhs| < 10^(10-digits).
// Backend failures surface as status Error with the message attached.
VerificationResult verify_instance(const std::string& id, const ParamMap& params,
                                   VerifyMode mode, unsigned digits,
                                   EvalCache* cache = nullptr);

// Distance of the alternating sin^2 partial sums from their limits,
// |S_1(k) + 1/2| resp. |S_2(k) - 1/2|, computed via the closed form (plus
// the extra term for the second family). `which` is "C31A" or "C31B".
BigFloat conjecture_deviation(long k, const std::string& which, unsigned digits);

// Admissible j below 2n for the sweepable families T21..T24.
std::vector<long> admissible_j(const std::string& id, long n);

} // namespace trigsum
