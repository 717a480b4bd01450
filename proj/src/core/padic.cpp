// SPDX-License-Identifier: MIT
#include "padiclab/padic.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "padiclab/error.hpp"

namespace padiclab::padic {

namespace {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1u) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::int64_t checked(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        fail(ErrorCode::Range, "rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are sufficient for every n < 2^64.
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
    require(is_prime(value), std::to_string(value) + " is not prime");
}

PAdicDigits digits(std::int64_t n, std::uint64_t base, BaseCheck check) {
    require(n >= 0, "digits: n must be nonnegative, got " + std::to_string(n));
    require(base >= 2, "digits: base must be at least 2");
    if (check == BaseCheck::Strict) require(is_prime(base), "digits: base " + std::to_string(base) + " is not prime");

    PAdicDigits out;
    out.base = base;
    auto rest = static_cast<std::uint64_t>(n);
    if (rest == 0) {
        out.digits = {0};
        return out;
    }
    while (rest > 0) {
        out.digits.push_back(static_cast<int>(rest % base));
        rest /= base;
    }
    for (std::size_t k = 0; k < out.digits.size(); ++k) {
        if (out.digits[k] != 0) {
            out.valuation = static_cast<int>(k);
            break;
        }
    }
    return out;
}

std::uint64_t from_digits(const PAdicDigits& d) {
    require(d.base >= 2, "from_digits: base must be at least 2");
    require(!d.digits.empty(), "from_digits: empty digit list");
    u128 value = 0;
    for (std::size_t k = d.digits.size(); k-- > 0;) {
        int a = d.digits[k];
        require(a >= 0 && static_cast<std::uint64_t>(a) < d.base,
                "from_digits: digit " + std::to_string(a) + " out of range for base " + std::to_string(d.base));
        value = value * d.base + static_cast<u128>(a);
        if (value > std::numeric_limits<std::uint64_t>::max()) fail(ErrorCode::Range, "from_digits: value overflows 64 bits");
    }
    return static_cast<std::uint64_t>(value);
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    require(denominator != 0, "rational with zero denominator");
    if (denominator < 0) {
        numerator = checked(-static_cast<i128>(numerator));
        denominator = checked(-static_cast<i128>(denominator));
    }
    std::int64_t g = std::gcd(numerator, denominator);
    if (g == 0) g = 1;
    num_ = numerator / g;
    den_ = denominator / g;
}

Rational operator+(const Rational& a, const Rational& b) {
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    // reduce before narrowing
    i128 x = n < 0 ? -n : n, y = d;
    while (y != 0) {
        i128 t = x % y;
        x = y;
        y = t;
    }
    if (x > 1) {
        n /= x;
        d /= x;
    }
    return Rational(checked(n), checked(d));
}

Rational operator*(const Rational& a, const Rational& b) {
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    return Rational(checked(n), checked(d));
}

int valuation(std::int64_t n, std::uint64_t p) {
    require(n != 0, "valuation of zero is undefined");
    require(p >= 2, "valuation: base must be at least 2");
    u128 m = n < 0 ? static_cast<u128>(-(static_cast<i128>(n))) : static_cast<u128>(n);
    int v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

PAdicNorm padic_norm(const Rational& r, const Prime& p) {
    if (r.is_zero()) return {};
    int nu = valuation(r.num(), p.value()) - valuation(r.den(), p.value());
    return {nu, std::pow(static_cast<double>(p.value()), -nu)};
}

}  // namespace padiclab::padic
