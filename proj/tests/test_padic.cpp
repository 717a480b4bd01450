// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <array>
#include <cmath>

#include "oracles.hpp"
#include "padiclab/error.hpp"
#include "padiclab/padic.hpp"

using namespace padiclab;
using namespace padiclab::padic;

TEST_CASE("digits of small integers") {
    CHECK(digits(10, 3).digits == std::vector<int>{1, 0, 1});
    CHECK(digits(26, 3).digits == std::vector<int>{2, 2, 2});
    auto zero = digits(0, 3);
    CHECK(zero.digits == std::vector<int>{0});
    CHECK_FALSE(zero.valuation.has_value());
    CHECK(digits(18, 3).valuation == 2);
}

TEST_CASE("digits rejects bad input") {
    CHECK_THROWS_AS(digits(-1, 3), Error);
    CHECK_THROWS_AS(digits(10, 4), Error);
    CHECK(digits(10, 4, BaseCheck::AnyBase).digits == std::vector<int>{2, 2});
    CHECK_THROWS_AS(digits(10, 1, BaseCheck::AnyBase), Error);
    CHECK_THROWS_AS(Prime(9), Error);
}

TEST_CASE("from_digits") {
    CHECK(from_digits({{1, 0, 1}, 3, 0}) == 10);
    CHECK(from_digits({{0}, 3, std::nullopt}) == 0);
    CHECK(from_digits({{2, 2}, 5, 0}) == 12);
    CHECK_THROWS_AS(from_digits({{3}, 3, 0}), Error);
}

TEST_CASE("round trip and agreement with repeated division") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (std::int64_t n = 0; n < 1'000'000; n += (n < 5000 ? 1 : 97)) {
            auto d = digits(n, p);
            REQUIRE(d.digits == oracle::digits(n, static_cast<std::int64_t>(p)));
            REQUIRE(from_digits(d) == static_cast<std::uint64_t>(n));
        }
    }
}

TEST_CASE("shift law") {
    oracle::Gen g(11);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t p = std::array<std::uint64_t, 3>{2, 3, 5}[i % 3];
        std::int64_t n = g.integer(1, 1'000'000);
        auto a = digits(n, p).digits;
        auto b = digits(n * static_cast<std::int64_t>(p), p).digits;
        a.insert(a.begin(), 0);
        REQUIRE(a == b);
    }
}

TEST_CASE("is_prime against trial division") {
    auto trial = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == trial(n));
    CHECK(is_prime(18446744073709551557ULL));
    CHECK_FALSE(is_prime(18446744073709551557ULL - 2));
}

TEST_CASE("p-adic norm examples") {
    auto a = padic_norm(Rational(12), Prime(3));
    CHECK(a.valuation == 1);
    CHECK(a.norm == doctest::Approx(1.0 / 3));
    auto b = padic_norm(Rational(1, 9), Prime(3));
    CHECK(b.valuation == -2);
    CHECK(b.norm == doctest::Approx(9.0));
    auto c = padic_norm(Rational(0), Prime(3));
    CHECK_FALSE(c.valuation.has_value());
    CHECK(c.norm == 0.0);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("ultrametric and multiplicative norm") {
    oracle::Gen g(5);
    for (int i = 0; i < 2000; ++i) {
        Prime p(std::array<std::uint64_t, 4>{2, 3, 5, 7}[i % 4]);
        Rational x(g.integer(-5000, 5000), g.integer(1, 5000));
        Rational y(g.integer(-5000, 5000), g.integer(1, 5000));
        double nx = padic_norm(x, p).norm, ny = padic_norm(y, p).norm;
        REQUIRE(padic_norm(x + y, p).norm <= std::max(nx, ny) * (1 + 1e-15));
        REQUIRE(padic_norm(x * y, p).norm == doctest::Approx(nx * ny).epsilon(1e-15));
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(48, 2) == 4);
    CHECK(valuation(-45, 3) == 2);
    CHECK(valuation(7, 5) == 0);
    CHECK_THROWS_AS(valuation(0, 5), Error);
}
