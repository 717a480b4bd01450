// SPDX-License-Identifier: MIT
#include "padiclab/pricemap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "padiclab/error.hpp"
#include "padiclab/padic.hpp"
#include "padiclab/rng.hpp"

namespace padiclab::pricemap {

bool WaveSpec::integer_base() const { return base == std::floor(base); }

int WaveSpec::max_digit() const { return static_cast<int>(std::ceil(base)) - 1; }

std::int64_t WaveSpec::range_end() const {
    if (r_end >= 0) return r_end;
    double end = std::ceil(std::pow(base, n_digits) - 1e-9);
    if (!(end < 9.0e18)) fail(ErrorCode::Range, "range too large: base^N overflows");
    return static_cast<std::int64_t>(end);
}

void WaveSpec::validate() const {
    require(std::isfinite(base) && base > 1.0, "base must exceed 1");
    require(std::isfinite(b_frac) && b_frac > 0.0, "b must be positive");
    require(n_digits >= 1, "n_digits must be at least 1");
    require(r_begin >= 0, "range start must be nonnegative");
    if (r_end >= 0) require(r_end >= r_begin, "range end precedes range start");
}

std::vector<double> WaveSeries::values() const {
    std::vector<double> v;
    v.reserve(points.size());
    for (const auto& p : points) v.push_back(p.value);
    return v;
}

std::vector<int> expand(std::int64_t r, double base) {
    require(r >= 0, "expand: r must be nonnegative");
    require(base > 1.0, "base must exceed 1");
    if (base == std::floor(base)) return padic::digits(r, static_cast<std::uint64_t>(base), padic::BaseCheck::AnyBase).digits;

    if (r == 0) return {0};
    const int max_digit = static_cast<int>(std::ceil(base)) - 1;
    int top = static_cast<int>(std::floor(std::log(static_cast<double>(r)) / std::log(base)));
    // guard the floor against rounding in the logarithm
    while (std::pow(base, top + 1) <= static_cast<double>(r)) ++top;
    while (top > 0 && std::pow(base, top) > static_cast<double>(r)) --top;

    std::vector<int> out(static_cast<std::size_t>(top) + 1, 0);
    double rest = static_cast<double>(r);
    for (int k = top; k >= 0; --k) {
        double unit = std::pow(base, k);
        int a = static_cast<int>(std::floor((rest + 1e-9 * unit) / unit));
        a = std::clamp(a, 0, max_digit);
        out[static_cast<std::size_t>(k)] = a;
        rest = std::max(rest - a * unit, 0.0);
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

std::vector<double> digit_weights(double base, double b_frac, std::size_t count) {
    std::vector<double> w(count);
    for (std::size_t k = 0; k < count; ++k) w[k] = std::pow(base, b_frac * static_cast<double>(k));
    return w;
}

double f_b_map(std::int64_t r, const WaveSpec& spec) {
    spec.validate();
    require(r >= 0, "f_b: r must be nonnegative");
    auto a = expand(r, spec.base);
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != 0) sum += a[k] * std::pow(spec.base, spec.b_frac * static_cast<double>(k));
    }
    return sum;
}

WaveSeries wave_series(const WaveSpec& spec) {
    spec.validate();
    std::int64_t end = spec.range_end();
    if (end - spec.r_begin > kMaxSeriesLength)
        fail(ErrorCode::Range, "range too large: " + std::to_string(end - spec.r_begin) + " points exceeds the cap of " +
                                   std::to_string(kMaxSeriesLength));
    WaveSeries out;
    out.points.reserve(static_cast<std::size_t>(end - spec.r_begin));
    std::vector<double> weights = digit_weights(spec.base, spec.b_frac, 64);
    for (std::int64_t r = spec.r_begin; r < end; ++r) {
        auto a = expand(r, spec.base);
        double v = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) v += a[k] * weights[k];
        out.points.push_back({r, v});
    }
    return out;
}

WaveSeries envelope_compose(std::span<const double> g, const WaveSpec& spec, double scale) {
    spec.validate();
    require(scale > 0.0 && std::isfinite(scale), "envelope: scale must be positive");
    WaveSeries out;
    if (g.empty()) return out;
    for (double v : g) require(std::isfinite(v), "envelope: samples must be finite");
    double lo = *std::min_element(g.begin(), g.end());
    out.points.reserve(g.size());
    for (std::size_t t = 0; t < g.size(); ++t) {
        double n = std::round(scale * (g[t] - lo));
        if (n > 9.0e18) fail(ErrorCode::Range, "envelope: quantised argument overflows");
        out.points.push_back({static_cast<std::int64_t>(t), f_b_map(static_cast<std::int64_t>(n), spec)});
    }
    return out;
}

WaveSeries random_signal(const WaveSpec& spec, std::size_t length, std::uint64_t seed) {
    spec.validate();
    std::int64_t end = spec.range_end();
    require(end > 0, "random signal: empty range");
    Rng rng(seed);
    WaveSeries out;
    out.points.reserve(length);
    for (std::size_t t = 0; t < length; ++t) {
        auto r = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(end)));
        out.points.push_back({static_cast<std::int64_t>(t), f_b_map(r, spec)});
    }
    return out;
}

std::vector<std::vector<double>> delay_embed(std::span<const double> series, int m, int stride) {
    require(m >= 1, "delay_embed: m must be at least 1");
    require(stride >= 1, "delay_embed: stride must be at least 1");
    const std::size_t span = static_cast<std::size_t>(m - 1) * static_cast<std::size_t>(stride);
    if (series.size() < span + 1)
        fail(ErrorCode::InvalidArgument, "delay_embed: series shorter than window (" + std::to_string(series.size()) +
                                             " < " + std::to_string(span + 1) + ")");
    std::vector<std::vector<double>> out;
    out.reserve(series.size() - span);
    for (std::size_t i = 0; i + span < series.size(); ++i) {
        std::vector<double> v(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) v[static_cast<std::size_t>(j)] = series[i + static_cast<std::size_t>(j * stride)];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace padiclab::pricemap
