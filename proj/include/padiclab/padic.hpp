// SPDX-License-Identifier: MIT
//
// Base-p digit expansions and the p-adic valuation/norm on integers and
// rationals.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace padiclab::padic {

/// Deterministic Miller-Rabin, exact for the full 64-bit range.
bool is_prime(std::uint64_t n);

class Prime {
public:
    /// Throws InvalidArgument unless `value` is prime.
    explicit Prime(std::uint64_t value);
    std::uint64_t value() const noexcept { return value_; }

private:
    std::uint64_t value_;
};

/// Digits a_0 (least significant) .. a_k of a nonnegative integer.
/// Canonical: no leading zeros, zero is [0] with no valuation.
struct PAdicDigits {
    std::vector<int> digits;
    std::uint64_t base = 2;
    std::optional<int> valuation;  // index of the lowest nonzero digit

    bool operator==(const PAdicDigits&) const = default;
};

enum class BaseCheck {
    Strict,    // base must be prime
    AnyBase,   // any integer base >= 2 (used by pattern generation)
};

PAdicDigits digits(std::int64_t n, std::uint64_t base, BaseCheck check = BaseCheck::Strict);
inline PAdicDigits digits(std::int64_t n, const Prime& p) { return digits(n, p.value()); }

/// Inverse of digits(). Rejects out-of-range digits and results that overflow.
std::uint64_t from_digits(const PAdicDigits& d);

/// Rational in lowest terms with a positive denominator.
class Rational {
public:
    Rational(std::int64_t numerator = 0, std::int64_t denominator = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    bool operator==(const Rational&) const = default;

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// r = p^valuation * m/n with gcd(m,p) = gcd(n,p) = 1; norm = p^-valuation.
/// Zero has no valuation and norm 0.
struct PAdicNorm {
    std::optional<int> valuation;
    double norm = 0.0;
};

PAdicNorm padic_norm(const Rational& r, const Prime& p);

/// Multiplicity of p in |n|, n != 0.
int valuation(std::int64_t n, std::uint64_t p);

}  // namespace padiclab::padic
