// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "oracles.hpp"
#include "padiclab/error.hpp"
#include "padiclab/qcalc.hpp"

using namespace padiclab;
using namespace padiclab::qcalc;

namespace {

// Divided difference of g(y) = sqrt(y) sinh(sqrt(y)) between a and b, written
// as the mean of g' over the segment and integrated numerically.
double divided_difference_oracle(double a, double b) {
    auto gprime = [](double y) {
        double s = std::sqrt(y);
        return s == 0.0 ? 1.0 : 0.5 * (std::sinh(s) / s + std::cosh(s));
    };
    boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate([&](double t) { return gprime(b + t * (a - b)); }, 0.0, 1.0);
}

}  // namespace

TEST_CASE("quantum numbers") {
    for (double q : {0.1, 0.5, 2.0, 7.0}) CHECK(q_number(1.0, q) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(q_number(2.0, 2.0) == doctest::Approx(2.5));
    CHECK(q_number(3.0, 2.0) == doctest::Approx(5.25));
    CHECK(q_number(2.0, 3.0, 2.0) == doctest::Approx((4.0 - 1.0 / 9) / (2.0 - 1.0 / 3)));
    CHECK_THROWS_AS(q_number(2.0, 1.0), Error);
    CHECK_THROWS_AS(q_number(2.0, 2.0, 0.5), Error);
}

TEST_CASE("q factorial and Pochhammer") {
    CHECK(q_factorial(0, 0.5) == 1.0);
    CHECK(q_factorial(3, 1.0) == 6.0);
    CHECK(q_factorial(2, 0.5) == doctest::Approx(2.5));
    CHECK(q_factorial(3, 1.0 + 1e-9) == doctest::Approx(6.0).epsilon(1e-6));
    CHECK_THROWS_AS(q_factorial(-1, 0.5), Error);
    CHECK(q_pochhammer(5.0, 1.0, 0.5, 0) == 1.0);
    CHECK(q_pochhammer(2.0, 1.0, 0.5, 1) == 1.0);
    CHECK(q_pochhammer(2.0, 1.0, 0.5, 2) == doctest::Approx(1.5));
}

TEST_CASE("small-q asymptotics") {
    const double q = 1e-3;
    for (int n = 1; n <= 6; ++n) {
        CHECK(q_number(n, q) * std::pow(q, n - 1) == doctest::Approx(1.0).epsilon(0.01));
        CHECK(q_factorial(n, q) * std::pow(q, n * (n - 1) / 2) == doctest::Approx(1.0).epsilon(0.01));
    }
}

TEST_CASE("D_q on monomials") {
    oracle::Gen g(3);
    for (int n = 0; n <= 12; ++n) {
        for (int i = 0; i < 20; ++i) {
            double q = g.uniform(0.2, 3.0), x = g.uniform(0.2, 1.5);
            if (std::abs(q - 1) < 1e-3) continue;
            double got = d_q([n](double y) { return std::pow(y, n); }, x, q);
            double want = n == 0 ? 0.0 : q_number(n, q) * std::pow(x, n - 1);
            REQUIRE(oracle::rel_err(got, want) < 1e-12);
        }
    }
    CHECK(d_q([](double y) { return y * y; }, 1.0, 2.0) == doctest::Approx(2.5));
    CHECK(d_q([](double) { return 3.0; }, 0.7, 0.4) == 0.0);
    CHECK_THROWS_AS(d_q([](double y) { return y; }, 0.0, 0.5), Error);
}

TEST_CASE("D_q approaches the derivative") {
    CHECK(d_q([](double y) { return std::sin(y); }, 1.0, 1.0 + 1e-6) == doctest::Approx(std::cos(1.0)).epsilon(1e-6));
    // The symmetric difference has an even error expansion in ln q.
    auto err = [](double q) { return std::abs(d_q([](double y) { return std::exp(y); }, 1.0, q) - std::exp(1.0)); };
    double e1 = err(1.01), e2 = err(1.005);
    CHECK(std::log2(e1 / e2) > 1.9);
}

TEST_CASE("D_rq") {
    CHECK(d_rq([](double y) { return y * y; }, 1.0, 3.0, 2.0) == doctest::Approx(5.0));
    CHECK(d_rq([](double y) { return y; }, 0.3, 1.7, 0.2) == doctest::Approx(1.0));
    oracle::Gen g(8);
    for (int i = 0; i < 100; ++i) {
        double r = g.uniform(0.1, 4), q = g.uniform(0.1, 4), x = g.uniform(-2, 2);
        if (std::abs(r - q) < 1e-3 || std::abs(x) < 1e-3) continue;
        REQUIRE(oracle::rel_err(d_rq([](double y) { return y * y; }, x, r, q), (r + q) * x) < 1e-12);
    }
    CHECK_THROWS_AS(d_rq([](double y) { return y; }, 1.0, 2.0, 2.0), Error);
    CHECK_THROWS_AS(d_rq([](double y) { return y; }, 0.0, 2.0, 3.0), Error);
    auto g4 = [](double y) { return std::sqrt(y) * std::sinh(std::sqrt(y)); };
    CHECK(d_rq(g4, 1.0, 4.0, 1.0) == doctest::Approx(2.0262).epsilon(1e-4));
}

TEST_CASE("f4 values and identity") {
    CHECK(f4(1.0, 0.0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-12));
    CHECK(f4(1.0, 1.0) == doctest::Approx(std::exp(1.0) / 2).epsilon(1e-12));
    CHECK(f4(2.0, 1.0) == doctest::Approx((2 * std::sinh(2.0) - std::sinh(1.0)) / 3).epsilon(1e-14));
    oracle::Gen g(21);
    auto g4 = [](double y) { return std::sqrt(y) * std::sinh(std::sqrt(y)); };
    for (int i = 0; i < 100; ++i) {
        double E = g.uniform(0.05, 3), h = g.uniform(0.05, 3);
        REQUIRE(oracle::rel_err(f4(E, h), divided_difference_oracle(E * E, h * h)) < 1e-10);
        if (std::abs(E - h) > 1e-2) REQUIRE(oracle::rel_err(f4(E, h), d_rq(g4, 1.0, E * E, h * h)) < 1e-10);
    }
    // Continuity across the series switch.
    for (double d : {1e-3, 1e-5, 1e-7, 1e-9, 0.0})
        CHECK(oracle::rel_err(f4(1.3 + d, 1.3), divided_difference_oracle((1.3 + d) * (1.3 + d), 1.69)) < 1e-10);
}

TEST_CASE("k_special") {
    CHECK(k_special({2.0, 1.0, 1.0}) == doctest::Approx(-0.20085).epsilon(1e-4));
    CHECK(k_special({2.0, 1.0, 1.0}) == doctest::Approx(k_special({1.0, 2.0, 1.0})).epsilon(1e-14));
    CHECK_THROWS_AS(k_special({0.0, 1.0, 1.0}), Error);
    // Divided difference of cosh(alpha sqrt(y)) / y, again as the mean derivative.
    boost::math::quadrature::tanh_sinh<double> ts;
    oracle::Gen g(4);
    for (int i = 0; i < 50; ++i) {
        double E = g.uniform(0.3, 2.5), h = g.uniform(0.3, 2.5), alpha = g.uniform(0.05, 2.0);
        double a = E * E, b = h * h;
        auto dk = [alpha](double y) {
            double s = std::sqrt(y);
            return alpha * std::sinh(alpha * s) / (2 * s * y) - std::cosh(alpha * s) / (y * y);
        };
        double want = ts.integrate([&](double t) { return dk(b + t * (a - b)); }, 0.0, 1.0);
        REQUIRE(oracle::rel_err(k_special({E, h, alpha}), want) < 1e-9);
    }
    CHECK(std::isfinite(k_special({1.0, 1.0, 1.0})));
    CHECK(k_special({1.0 + 1e-6, 1.0, 1.0}) == doctest::Approx(k_special({1.0, 1.0, 1.0})).epsilon(1e-5));
}

TEST_CASE("ladder algebra") {
    auto a = check_algebra_relations(3, {0.5, std::nullopt});
    CHECK(a.sz_splus_residual < 1e-12);
    CHECK(a.sz_sminus_residual < 1e-12);
    CHECK(a.commutator_residual < 1e-12);
    auto b = check_algebra_relations(10, {0.9, std::nullopt});
    CHECK(b.sz_splus_residual < 1e-10);
    CHECK(b.commutator_residual < 1e-10);
    auto c = check_algebra_relations(5, {1.0 + 1e-7, std::nullopt});
    CHECK(c.classical_deviation < 1e-6);
    auto d = check_algebra_relations(6, {0.5, 2.0});
    CHECK(d.two_parameter);
    CHECK(d.commutator_residual < 1e-10);
    // [n+1] - [n] coefficients against direct evaluation.
    for (std::size_t n = 0; n < a.commutator_coefficients.size(); ++n) {
        double want = q_number(n + 1.0, 0.5) - q_number(static_cast<double>(n), 0.5);
        CHECK(a.commutator_coefficients[n] == doctest::Approx(want).epsilon(1e-12));
    }
}
