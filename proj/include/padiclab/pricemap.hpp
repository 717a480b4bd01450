// SPDX-License-Identifier: MIT
//
// Fractal price map f_b(r) = sum_k a_k base^(b k) over the digits a_k of r,
// wave series, Elliott-style pattern presets, envelope composition and delay
// embedding.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace padiclab::pricemap {

/// Largest series wave_series() will materialise.
inline constexpr std::int64_t kMaxSeriesLength = 10'000'000;

struct WaveSpec {
    double base = 3.0;     // integer base, or a non-integer (rational) base > 1
    double b_frac = 0.5;   // fractal exponent b
    int n_digits = 6;      // N: default range is [0, base^N)
    std::int64_t r_begin = 0;
    std::int64_t r_end = -1;  // exclusive; negative means ceil(base^N)

    bool integer_base() const;
    /// Largest admissible digit, ceil(base) - 1.
    int max_digit() const;
    std::int64_t range_end() const;
    void validate() const;
};

struct WavePoint {
    std::int64_t r = 0;
    double value = 0.0;
};

/// Ordered (r, value) samples; r strictly increasing. For patterns and
/// envelopes r is the sample index.
struct WaveSeries {
    std::vector<WavePoint> points;

    std::vector<double> values() const;
    std::size_t size() const { return points.size(); }
};

/// Digits of r, least significant first. Integer bases use the ordinary
/// positional expansion; other bases the greedy beta-expansion with digits
/// {0 .. ceil(base) - 1} (the fractional remainder is dropped).
std::vector<int> expand(std::int64_t r, double base);

/// base^(b k) for k = 0..count-1.
std::vector<double> digit_weights(double base, double b_frac, std::size_t count);

double f_b_map(std::int64_t r, const WaveSpec& spec);

/// f_b over [r_begin, range_end()). Throws Range above kMaxSeriesLength.
WaveSeries wave_series(const WaveSpec& spec);

enum class PatternKind { Impulse, Zigzag, Flat, TriangleConverging, TriangleExpanding, Diagonal };

std::string_view to_string(PatternKind kind);
PatternKind parse_pattern_kind(std::string_view name);
/// Number of monotone legs the kind is built from (5 or 3).
int segment_signature(PatternKind kind);
bool is_motive(PatternKind kind);

/// Builds the anchor points of a pattern from f_b and fills every leg with
/// `refine` levels of strictly monotone fractal detail. trend is +1 or -1;
/// motive kinds move with the trend, corrective kinds against it.
WaveSeries pattern(PatternKind kind, const WaveSpec& spec, int trend, int refine = 0);

struct PatternPreset {
    PatternKind kind;
    double base;
    double b_frac;
    int n_digits;
};

/// Parameterisations shipped with the library; each satisfies its kind's
/// signature for both trends.
const std::vector<PatternPreset>& pattern_presets();

/// Quantises g to n(t) = round(scale (g(t) - min g)) and emits f_b(n(t)).
WaveSeries envelope_compose(std::span<const double> g, const WaveSpec& spec, double scale);

/// f_b(r_t) with r_t drawn uniformly from [0, range_end()) by a seeded generator.
WaveSeries random_signal(const WaveSpec& spec, std::size_t length, std::uint64_t seed);

/// Vectors (x[i], x[i + stride], ..., x[i + (m-1) stride]),
/// count = length - (m - 1) stride.
std::vector<std::vector<double>> delay_embed(std::span<const double> series, int m, int stride);

}  // namespace padiclab::pricemap
