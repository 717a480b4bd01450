// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "padiclab/error.hpp"
#include "padiclab/pricemap.hpp"

using namespace padiclab;
using namespace padiclab::pricemap;

namespace {

WaveSpec spec_of(const PatternPreset& p) {
    WaveSpec s;
    s.base = p.base;
    s.b_frac = p.b_frac;
    s.n_digits = p.n_digits;
    return s;
}

bool is_triangle(PatternKind k) { return k == PatternKind::TriangleConverging || k == PatternKind::TriangleExpanding; }

}  // namespace

TEST_CASE("every preset keeps its signature") {
    REQUIRE_FALSE(pattern_presets().empty());
    for (const auto& preset : pattern_presets()) {
        for (int trend : {1, -1}) {
            for (int refine : {0, 1, 2}) {
                CAPTURE(to_string(preset.kind));
                CAPTURE(preset.base);
                CAPTURE(trend);
                CAPTURE(refine);
                auto y = pattern(preset.kind, spec_of(preset), trend, refine).values();
                REQUIRE(oracle::monotone_segments(y) == segment_signature(preset.kind));

                const double net = y.back() - y.front();
                const int direction = is_motive(preset.kind) ? trend : -trend;
                if (!is_triangle(preset.kind)) REQUIRE(net * direction > 0);

                auto sw = oracle::swings(y);
                REQUIRE(static_cast<int>(sw.size()) == segment_signature(preset.kind));
                if (preset.kind == PatternKind::TriangleConverging)
                    for (std::size_t i = 1; i < sw.size(); ++i) REQUIRE(sw[i] < sw[i - 1]);
                if (preset.kind == PatternKind::TriangleExpanding)
                    for (std::size_t i = 1; i < sw.size(); ++i) REQUIRE(sw[i] > sw[i - 1]);
            }
        }
    }
}

TEST_CASE("impulse and zigzag on base 3") {
    WaveSpec s;
    s.base = 3;
    s.b_frac = 0.5;
    auto imp = pattern(PatternKind::Impulse, s, 1).values();
    CHECK(oracle::monotone_segments(imp) == 5);
    CHECK(imp.back() > imp.front());
    auto zz = pattern(PatternKind::Zigzag, s, 1).values();
    CHECK(oracle::monotone_segments(zz) == 3);
    CHECK(zz.back() < zz.front());
    // Anchors come straight from f_b on the p^L lattice.
    for (std::size_t j = 0; j < imp.size(); ++j) CHECK(imp[j] == doctest::Approx(oracle::f_b(static_cast<std::int64_t>(j) * 81, 3, 0.5)));
}

TEST_CASE("refinement keeps legs monotone and passes through the anchors") {
    WaveSpec s;
    s.base = 3;
    s.b_frac = 0.5;
    auto coarse = pattern(PatternKind::Impulse, s, 1, 0).values();
    auto fine = pattern(PatternKind::Impulse, s, 1, 2).values();
    CHECK(fine.size() > coarse.size());
    for (double a : coarse) CHECK(std::find(fine.begin(), fine.end(), a) != fine.end());
    auto pts = pattern(PatternKind::Impulse, s, 1, 2).points;
    for (std::size_t i = 0; i < pts.size(); ++i) REQUIRE(pts[i].r == static_cast<std::int64_t>(i));
}

TEST_CASE("pattern validation") {
    WaveSpec integer;
    integer.base = 3;
    CHECK_THROWS_WITH_AS(pattern(PatternKind::TriangleConverging, integer, 1), doctest::Contains("non-integer"), Error);
    WaveSpec rational;
    rational.base = 1.5;
    CHECK_THROWS_AS(pattern(PatternKind::Impulse, rational, 1), Error);
    CHECK_THROWS_AS(pattern(PatternKind::Impulse, integer, 0), Error);
    CHECK(parse_pattern_kind("Triangle_Expanding") == PatternKind::TriangleExpanding);
    CHECK(parse_pattern_kind("zigzag") == PatternKind::Zigzag);
    CHECK_THROWS_AS(parse_pattern_kind("wedge"), Error);
    for (auto k : {PatternKind::Impulse, PatternKind::Zigzag, PatternKind::Flat, PatternKind::TriangleConverging,
                   PatternKind::TriangleExpanding, PatternKind::Diagonal})
        CHECK(parse_pattern_kind(to_string(k)) == k);
}
