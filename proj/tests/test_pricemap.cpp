// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include "oracles.hpp"
#include "padiclab/error.hpp"
#include "padiclab/pricemap.hpp"

using namespace padiclab;
using namespace padiclab::pricemap;

namespace {

WaveSpec spec(double base, double b, int n = 6) {
    WaveSpec s;
    s.base = base;
    s.b_frac = b;
    s.n_digits = n;
    return s;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n, my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

TEST_CASE("f_b examples") {
    CHECK(f_b_map(10, spec(3, 1)) == 10.0);
    CHECK(f_b_map(10, spec(3, 0.5)) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(f_b_map(4, spec(3, 1.5)) == doctest::Approx(1 + std::pow(3.0, 1.5)).epsilon(1e-15));
    CHECK(f_b_map(0, spec(5, 0.7)) == 0.0);
}

TEST_CASE("f_b against the digit-sum oracle") {
    oracle::Gen g(2);
    for (int i = 0; i < 3000; ++i) {
        std::int64_t p = std::array<std::int64_t, 4>{2, 3, 5, 7}[i % 4];
        double b = g.uniform(0.1, 2.0);
        std::int64_t r = g.integer(0, 50'000'000);
        REQUIRE(oracle::rel_err(f_b_map(r, spec(static_cast<double>(p), b)), oracle::f_b(r, p, b)) < 1e-13);
    }
}

TEST_CASE("scale invariance, additivity and bounds") {
    oracle::Gen g(9);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t p = std::array<std::int64_t, 3>{2, 3, 5}[i % 3];
        double b = g.uniform(0.2, 1.8);
        auto s = spec(static_cast<double>(p), b);
        std::int64_t r = g.integer(0, 1'000'000);
        REQUIRE(oracle::rel_err(f_b_map(p * r, s), std::pow(static_cast<double>(p), b) * f_b_map(r, s)) < 1e-12);

        // Split r's digits into two disjoint halves.
        auto d = oracle::digits(r, p);
        std::int64_t lo = 0, hi = 0, w = 1;
        for (std::size_t k = 0; k < d.size(); ++k, w *= p) (k % 2 ? hi : lo) += d[k] * w;
        REQUIRE(oracle::rel_err(f_b_map(r, s), f_b_map(lo, s) + f_b_map(hi, s)) < 1e-12);

        const int N = static_cast<int>(d.size());
        double pb = std::pow(static_cast<double>(p), b);
        double bound = (p - 1) * (std::pow(pb, N) - 1) / (pb - 1);
        REQUIRE(f_b_map(r, s) >= 0.0);
        REQUIRE(f_b_map(r, s) <= bound * (1 + 1e-12));
    }
    for (std::int64_t r = 0; r < 100000; ++r) REQUIRE(f_b_map(r, spec(3, 1)) == static_cast<double>(r));
}

TEST_CASE("wave series shape") {
    auto w = wave_series(spec(3, 0.5));
    REQUIRE(w.size() == 729);
    auto v = w.values();
    auto it = std::max_element(v.begin(), v.end());
    CHECK(std::distance(v.begin(), it) == 728);
    CHECK(*it == doctest::Approx(2 * (27 - 1) / (std::sqrt(3.0) - 1)).epsilon(1e-14));
    for (std::size_t r = 0; r < w.size(); ++r) REQUIRE(w.points[r].r == static_cast<std::int64_t>(r));

    auto id = spec(3, 1);
    id.r_end = 100;
    auto line = wave_series(id);
    for (const auto& pt : line.points) REQUIRE(pt.value == static_cast<double>(pt.r));

    auto window = spec(3, 0.5);
    window.r_begin = 100;
    window.r_end = 200;
    auto sub = wave_series(window);
    CHECK(sub.size() == 100);
    CHECK(sub.points.front().value == w.points[100].value);
}

TEST_CASE("wave series validation") {
    CHECK_THROWS_WITH_AS(wave_series(spec(1, 0.5)), doctest::Contains("base must exceed 1"), Error);
    CHECK_THROWS_AS(wave_series(spec(3, -1)), Error);
    try {
        wave_series(spec(3, 0.5, 20));
        FAIL("expected a range error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Range);
    }
}

TEST_CASE("non-integer bases use the greedy expansion") {
    for (double base : {1.5, 2.5, 10.0 / 3}) {
        const int dmax = static_cast<int>(std::ceil(base)) - 1;
        for (std::int64_t r = 0; r < 3000; ++r) {
            auto d = expand(r, base);
            long double value = 0, w = 1;
            for (int a : d) {
                REQUIRE(a >= 0);
                REQUIRE(a <= dmax);
                value += a * w;
                w *= base;
            }
            // Greedy: what is left over is below one unit of the lowest place.
            REQUIRE(value <= r + 1e-9L);
            REQUIRE(static_cast<long double>(r) - value < 1.0L);
        }
    }
    CHECK(expand(10, 3.0) == std::vector<int>{1, 0, 1});
    auto s = spec(1.5, 1.0);
    CHECK(s.max_digit() == 1);
    CHECK_FALSE(s.integer_base());
}

TEST_CASE("envelope composition") {
    std::vector<double> flat(50, 3.7);
    for (const auto& pt : envelope_compose(flat, spec(3, 0.5), 100).points) REQUIRE(pt.value == 0.0);

    std::vector<double> g;
    for (int i = 0; i < 200; ++i) g.push_back(std::sin(0.1 * i));
    const double gmin = *std::min_element(g.begin(), g.end());
    auto ident = envelope_compose(g, spec(3, 1), 100);
    for (std::size_t i = 0; i < g.size(); ++i) REQUIRE(ident.points[i].value == std::round(100 * (g[i] - gmin)));

    std::vector<double> s;
    const int n = 1000;
    for (int i = 0; i < n; ++i) s.push_back(std::sin(4 * std::numbers::pi * i / (n - 1)));
    auto out = envelope_compose(s, spec(3, 0.5), 100).values();
    const double smin = *std::min_element(s.begin(), s.end());
    std::vector<double> avg, env;
    for (int i = 10; i + 10 < n; ++i) {
        avg.push_back(std::accumulate(out.begin() + i - 10, out.begin() + i + 11, 0.0) / 21);
        env.push_back(100 * (s[static_cast<std::size_t>(i)] - smin));
    }
    CHECK(pearson(avg, env) > 0.8);
}

TEST_CASE("random signal") {
    auto a = random_signal(spec(3, 0.5), 500, 42), b = random_signal(spec(3, 0.5), 500, 42);
    auto c = random_signal(spec(3, 0.5), 500, 43);
    CHECK(a.values() == b.values());
    CHECK(a.values() != c.values());
    const double top = 2 * (27 - 1) / (std::sqrt(3.0) - 1);
    for (double v : a.values()) {
        REQUIRE(v >= 0.0);
        REQUIRE(v <= top + 1e-12);
    }
}

TEST_CASE("delay embedding") {
    std::vector<double> x{1, 2, 3, 4};
    auto e = delay_embed(x, 3, 1);
    REQUIRE(e.size() == 2);
    CHECK(e[0] == std::vector<double>{1, 2, 3});
    CHECK(e[1] == std::vector<double>{2, 3, 4});
    auto one = delay_embed(x, 1, 1);
    REQUIRE(one.size() == 4);
    CHECK(one[2] == std::vector<double>{3});
    auto strided = delay_embed(std::vector<double>{0, 1, 2, 3, 4, 5}, 2, 3);
    REQUIRE(strided.size() == 3);
    CHECK(strided[2] == std::vector<double>{2, 5});
    CHECK_THROWS_WITH_AS(delay_embed(x, 5, 1), doctest::Contains("shorter than window"), Error);
    CHECK_THROWS_AS(delay_embed(x, 0, 1), Error);
}
