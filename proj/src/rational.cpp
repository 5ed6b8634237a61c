#include "trigsum/rational.hpp"

#include <cctype>
#include <numeric>

namespace trigsum {

BigRational parse_rational(std::string_view text) {
    auto bad = [&]() -> Error {
        return Error(Errc::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();

    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '-' || text[i] == '+') {
        neg = (text[i] == '-');
        ++i;
    }
    auto read_digits = [&](std::size_t& pos) -> std::string {
        std::string out;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            out += text[pos++];
        return out;
    };
    std::string num = read_digits(i);
    if (num.empty()) throw bad();
    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/') throw bad();
        ++i;
        den = read_digits(i);
        if (den.empty() || i != text.size()) throw bad();
    }
    BigInt n(num), d(den);
    if (neg) n = -n;
    return make_rational(n, d);
}

std::string to_string(const BigRational& q) {
    return q.str();
}

long euler_phi(long m) {
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

} // namespace trigsum
