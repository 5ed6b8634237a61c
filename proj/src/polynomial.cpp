#include "trigsum/polynomial.hpp"

#include <algorithm>

namespace trigsum {
namespace poly {

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long degree(const RatPoly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

RatPoly add(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    trim(r);
    return r;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    trim(r);
    return r;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

RatPoly scale(const RatPoly& a, const BigRational& c) {
    if (c == 0) return {};
    RatPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    trim(r);
    return r;
}

DivMod divmod(const RatPoly& a, const RatPoly& b) {
    long db = degree(b);
    if (db < 0) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    RatPoly rem = a;
    trim(rem);
    long da = degree(rem);
    if (da < db) return {{}, rem};
    RatPoly quot(da - db + 1);
    const BigRational& lead = b[db];
    for (long i = da; i >= db; --i) {
        if (static_cast<std::size_t>(i) >= rem.size() || rem[i] == 0) continue;
        BigRational factor = rem[i] / lead;
        quot[i - db] = factor;
        for (long j = 0; j <= db; ++j)
            rem[i - db + j] -= factor * b[j];
    }
    trim(quot);
    trim(rem);
    return {quot, rem};
}

BigRational eval(const RatPoly& p, const BigRational& x) {
    BigRational acc = 0;
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        acc = acc * x + p[i];
    return acc;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt eval(const IntPoly& p, const BigInt& x) {
    BigInt acc = 0;
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        acc = acc * x + p[i];
    return acc;
}

} // namespace poly
} // namespace trigsum
