#include "trigsum/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace trigsum {

namespace {

// Phi_d for every divisor d of m, by peeling x^d - 1 with the already
// known factors. All divisions are exact over the integers.
std::map<long, poly::RatPoly> cyclotomic_family(long m) {
    std::vector<long> divisors;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0) divisors.push_back(d);

    std::map<long, poly::RatPoly> phi;
    for (long d : divisors) {
        poly::RatPoly x_d_minus_1(d + 1);
        x_d_minus_1[0] = -1;
        x_d_minus_1[d] = 1;
        poly::RatPoly denom{BigRational(1)};
        for (long e : divisors) {
            if (e < d && d % e == 0)
                denom = poly::mul(denom, phi[e]);
        }
        auto dm = poly::divmod(x_d_minus_1, denom);
        if (poly::degree(dm.remainder) >= 0)
            throw Error(Errc::InvalidArgument, "cyclotomic division left a remainder");
        phi[d] = std::move(dm.quotient);
    }
    return phi;
}

std::mutex context_cache_mutex;
std::map<long, ContextPtr>& context_cache() {
    static std::map<long, ContextPtr> cache;
    return cache;
}

void add_scaled_row(std::vector<BigRational>& dst, const std::vector<BigRational>& row,
                    const BigRational& c) {
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (row[i] != 0) dst[i] += c * row[i];
}

} // namespace

CycloContext::CycloContext(long m) : m_(m) {
    phi_ = euler_phi(m);
    auto family = cyclotomic_family(m);
    const poly::RatPoly& phi_m = family[m];
    minpoly_.resize(phi_m.size());
    for (std::size_t i = 0; i < phi_m.size(); ++i) {
        if (!is_integer(phi_m[i]))
            throw Error(Errc::InvalidArgument, "cyclotomic polynomial not integral");
        minpoly_[i] = numerator(phi_m[i]);
    }
    if (static_cast<long>(minpoly_.size()) != phi_ + 1 || minpoly_.back() != 1)
        throw Error(Errc::InvalidArgument, "cyclotomic polynomial malformed");

    // x^k mod Phi_m for every exponent a product or a root lookup can need.
    long max_k = std::max(m - 1, 2 * phi_ - 2);
    rows_.resize(max_k + 1);
    for (long k = 0; k <= max_k; ++k) {
        if (k < phi_) {
            rows_[k].assign(phi_, BigRational(0));
            rows_[k][k] = 1;
            continue;
        }
        std::vector<BigRational> row(phi_, BigRational(0));
        const auto& prev = rows_[k - 1];
        BigRational lead = prev[phi_ - 1];
        for (long i = 1; i < phi_; ++i) row[i] = prev[i - 1];
        if (lead != 0) {
            for (long i = 0; i < phi_; ++i)
                if (minpoly_[i] != 0) row[i] -= lead * BigRational(minpoly_[i]);
        }
        rows_[k] = std::move(row);
    }
}

ContextPtr CycloContext::get(long m) {
    if (m < 1)
        throw Error(Errc::InvalidArgument, "cyclotomic order must be >= 1");
    if (euler_phi(m) > degree_cap())
        throw Error(Errc::CapExceeded,
                    "phi(" + std::to_string(m) + ") exceeds degree cap " +
                        std::to_string(degree_cap()));
    std::lock_guard<std::mutex> lock(context_cache_mutex);
    auto& cache = context_cache();
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    ContextPtr ctx(new CycloContext(m));
    cache.emplace(m, ctx);
    return ctx;
}

CycloElem::CycloElem() : ctx_(CycloContext::get(1)), coeffs_(1, BigRational(0)) {}

CycloElem::CycloElem(const BigRational& value)
    : ctx_(CycloContext::get(1)), coeffs_(1, value) {}

CycloElem::CycloElem(ContextPtr ctx, std::vector<BigRational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(ctx_->phi(), BigRational(0));
}

CycloElem CycloElem::zero(ContextPtr ctx) {
    return CycloElem(std::move(ctx), {});
}

CycloElem CycloElem::from_rational(ContextPtr ctx, const BigRational& value) {
    std::vector<BigRational> c(ctx->phi(), BigRational(0));
    c[0] = value;
    return CycloElem(std::move(ctx), std::move(c));
}

bool CycloElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloElem::operator==(const CycloElem& rhs) const {
    if (ctx_->order() == rhs.ctx_->order()) return coeffs_ == rhs.coeffs_;
    long M = lcm_long(ctx_->order(), rhs.ctx_->order());
    return lift_to_order(M).coeffs() == rhs.lift_to_order(M).coeffs();
}

namespace {
void require_same_order(const CycloElem& x, const CycloElem& y) {
    if (x.order() != y.order())
        throw Error(Errc::MixedOrders,
                    "operands live in Q(zeta_" + std::to_string(x.order()) + ") and Q(zeta_" +
                        std::to_string(y.order()) + ")");
}
} // namespace

CycloElem CycloElem::operator+(const CycloElem& rhs) const {
    require_same_order(*this, rhs);
    std::vector<BigRational> c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coeffs_[i];
    return CycloElem(ctx_, std::move(c));
}

CycloElem CycloElem::operator-(const CycloElem& rhs) const {
    require_same_order(*this, rhs);
    std::vector<BigRational> c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= rhs.coeffs_[i];
    return CycloElem(ctx_, std::move(c));
}

CycloElem& CycloElem::operator+=(const CycloElem& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloElem CycloElem::operator*(const CycloElem& rhs) const {
    require_same_order(*this, rhs);
    long phi = ctx_->phi();
    std::vector<BigRational> conv(2 * phi - 1, BigRational(0));
    for (long i = 0; i < phi; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            conv[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    std::vector<BigRational> out(conv.begin(), conv.begin() + phi);
    for (long k = phi; k < 2 * phi - 1; ++k)
        if (conv[k] != 0) add_scaled_row(out, ctx_->power_row(k), conv[k]);
    return CycloElem(ctx_, std::move(out));
}

CycloElem CycloElem::operator-() const {
    std::vector<BigRational> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return CycloElem(ctx_, std::move(c));
}

CycloElem CycloElem::operator*(const BigRational& c) const {
    std::vector<BigRational> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] * c;
    return CycloElem(ctx_, std::move(out));
}

CycloElem CycloElem::inverse() const {
    if (is_zero())
        throw Error(Errc::DivisionByZero, "inverse of zero field element");

    // Extended Euclid on (this, Phi_m) over Q, remainders kept monic to
    // keep coefficient growth in check. Invariant: r == s * this (mod Phi).
    poly::RatPoly modulus(ctx_->minpoly().size());
    for (std::size_t i = 0; i < modulus.size(); ++i)
        modulus[i] = BigRational(ctx_->minpoly()[i]);

    poly::RatPoly r0 = modulus;
    poly::RatPoly r1 = coeffs_;
    poly::trim(r1);
    poly::RatPoly s0{};          // 0
    poly::RatPoly s1{BigRational(1)};

    while (poly::degree(r1) > 0) {
        auto dm = poly::divmod(r0, r1);
        poly::RatPoly r2 = dm.remainder;
        poly::RatPoly s2 = poly::sub(s0, poly::mul(dm.quotient, s1));
        long d = poly::degree(r2);
        if (d >= 0) {
            BigRational lead = r2[d];
            r2 = poly::scale(r2, 1 / lead);
            s2 = poly::scale(s2, 1 / lead);
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (poly::degree(r1) < 0)
        throw Error(Errc::DivisionByZero, "element shares a factor with the modulus");
    // r1 is the nonzero constant s1 * this (mod Phi).
    poly::RatPoly inv = poly::scale(s1, 1 / r1[0]);
    auto reduced = poly::divmod(inv, modulus).remainder;
    reduced.resize(ctx_->phi(), BigRational(0));
    return CycloElem(ctx_, std::move(reduced));
}

CycloElem CycloElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloElem base = *this;
    CycloElem acc = CycloElem::from_rational(ctx_, BigRational(1));
    long k = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

CycloElem CycloElem::lift_to_order(long M) const {
    long m = ctx_->order();
    if (M == m) return *this;
    if (M % m != 0)
        throw Error(Errc::MixedOrders,
                    "cannot lift order " + std::to_string(m) + " into order " + std::to_string(M));
    ContextPtr big = CycloContext::get(M);
    long stride = M / m;
    std::vector<BigRational> out(big->phi(), BigRational(0));
    for (long i = 0; i < ctx_->phi(); ++i)
        if (coeffs_[i] != 0) add_scaled_row(out, big->power_row(i * stride), coeffs_[i]);
    return CycloElem(std::move(big), std::move(out));
}

BigRational CycloElem::to_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            throw Error(Errc::NotRational, "element has nonzero zeta coefficients");
    return coeffs_[0];
}

CycloElem root_of_unity(const ContextPtr& ctx, long a) {
    long m = ctx->order();
    long k = a % m;
    if (k < 0) k += m;
    std::vector<BigRational> c = ctx->power_row(k);
    return CycloElem(ctx, std::move(c));
}

namespace {
std::pair<CycloElem, CycloElem> lift_pair(const CycloElem& x, const CycloElem& y) {
    long M = lcm_long(x.order(), y.order());
    return {x.lift_to_order(M), y.lift_to_order(M)};
}
} // namespace

CycloElem join_add(const CycloElem& x, const CycloElem& y) {
    if (x.order() == y.order()) return x + y;
    auto [a, b] = lift_pair(x, y);
    return a + b;
}

CycloElem join_sub(const CycloElem& x, const CycloElem& y) {
    if (x.order() == y.order()) return x - y;
    auto [a, b] = lift_pair(x, y);
    return a - b;
}

CycloElem join_mul(const CycloElem& x, const CycloElem& y) {
    if (x.order() == y.order()) return x * y;
    auto [a, b] = lift_pair(x, y);
    return a * b;
}

namespace {

struct AngleParts {
    ContextPtr ctx;
    long M;
    long e; // exponent of zeta_M for e^{i*pi*a/q}
};

// Reduce a/q and pick the working field Q(zeta_M), M = lcm(4, 2q).
AngleParts angle_parts(const BigRational& r) {
    BigInt qb = denominator(r);
    if (qb > 1000000)
        throw Error(Errc::CapExceeded, "angle denominator too large: " + qb.str());
    long q = static_cast<long>(qb);
    long M = lcm_long(4, 2 * q);
    BigInt e_big = numerator(r) * (M / (2 * q));
    e_big %= M;
    if (e_big < 0) e_big += M;
    AngleParts parts;
    parts.M = M;
    parts.e = static_cast<long>(e_big);
    parts.ctx = CycloContext::get(M);
    return parts;
}

// 1/(zeta_M^u - 1) = (1/d) * sum_{t=0}^{d-1} t * zeta_M^{u t},
// d the multiplicative order of zeta_M^u; requires u != 0 (mod M).
CycloElem inv_root_minus_one(const ContextPtr& ctx, long u) {
    long M = ctx->order();
    u %= M;
    if (u < 0) u += M;
    if (u == 0)
        throw Error(Errc::DivisionByZero, "zeta^u - 1 with zeta^u = 1");
    long d = M / gcd_long(u, M);
    std::vector<BigRational> acc(ctx->phi(), BigRational(0));
    for (long t = 1; t < d; ++t)
        add_scaled_row(acc, ctx->power_row((u * t) % M), BigRational(t));
    CycloElem sum(ctx, std::move(acc));
    return sum * BigRational(1, d);
}

} // namespace

CycloElem sin_pi_rational(const BigRational& r) {
    auto p = angle_parts(r);
    CycloElem plus = root_of_unity(p.ctx, p.e);
    CycloElem minus = root_of_unity(p.ctx, p.M - p.e);
    CycloElem i_unit = root_of_unity(p.ctx, p.M / 4);
    // 1/(2i) = -i/2
    return (plus - minus) * i_unit * BigRational(-1, 2);
}

CycloElem cos_pi_rational(const BigRational& r) {
    auto p = angle_parts(r);
    CycloElem plus = root_of_unity(p.ctx, p.e);
    CycloElem minus = root_of_unity(p.ctx, p.M - p.e);
    return (plus + minus) * BigRational(1, 2);
}

CycloElem sin_pi_rational(const BigInt& a, const BigInt& q) {
    if (q < 1) throw Error(Errc::InvalidArgument, "sin_pi_rational requires q >= 1");
    return sin_pi_rational(make_rational(a, q));
}

CycloElem cos_pi_rational(const BigInt& a, const BigInt& q) {
    if (q < 1) throw Error(Errc::InvalidArgument, "cos_pi_rational requires q >= 1");
    return cos_pi_rational(make_rational(a, q));
}

CycloElem inv_sin_pi_rational(const BigRational& r) {
    auto p = angle_parts(r);
    long w = (2 * p.e) % p.M;
    if (w == 0)
        throw Error(Errc::DivisionByZero, "sin(" + r.str() + "*pi) = 0");
    // 1/sin = 2i * zeta^e / (zeta^{2e} - 1)
    CycloElem i_unit = root_of_unity(p.ctx, p.M / 4);
    return inv_root_minus_one(p.ctx, w) * root_of_unity(p.ctx, p.e) * i_unit * BigRational(2);
}

CycloElem inv_cos_pi_rational(const BigRational& r) {
    auto p = angle_parts(r);
    long w = (2 * p.e) % p.M;
    if (w == p.M / 2)
        throw Error(Errc::DivisionByZero, "cos(" + r.str() + "*pi) = 0");
    if (w == 0) {
        // cos = +-1; it is its own inverse.
        return root_of_unity(p.ctx, p.e);
    }
    // 1/cos = 2 zeta^e (zeta^{2e} - 1) / (zeta^{4e} - 1)
    CycloElem omega_minus_1 =
        root_of_unity(p.ctx, w) - CycloElem::from_rational(p.ctx, BigRational(1));
    return inv_root_minus_one(p.ctx, (2 * w) % p.M) * omega_minus_1 *
           root_of_unity(p.ctx, p.e) * BigRational(2);
}

} // namespace trigsum
