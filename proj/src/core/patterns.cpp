// SPDX-License-Identifier: MIT
//
// Pattern recipes. With s the signed direction (trend for motive kinds,
// -trend for corrective ones), d the largest digit and rho_k = base^(b k):
//
//   Impulse   s * f_b(j p^L), j = 0 .. 3p-1, L = max(N-2, 0)
//   Zigzag    s * f_b(j p^L), j = 0 .. 2p-1
//   Flat      s * f_b(j p^L), j = 0..p-1, then p-2..0, then 1..p-1
//   Diagonal  cumulative legs +d rho_L, -d rho_{L-2}, +d rho_{L-1},
//             -d rho_{L-3}, +d rho_{L-2}, L = N-1
//   Triangles five alternating legs with amplitudes d rho_L .. d rho_{L-4}
//             (converging) or the reverse (expanding), L = N-1
//
// The lattice recipes need an integer base with p^b < p - 1 so that every
// carry retraces. Triangles need a non-integer base.
#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "padiclab/error.hpp"
#include "padiclab/pricemap.hpp"

namespace padiclab::pricemap {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    std::replace(out.begin(), out.end(), '_', '-');
    return out;
}

void require_lattice_base(const WaveSpec& spec, std::string_view what, double min_base) {
    if (!spec.integer_base() || spec.base < min_base)
        fail(ErrorCode::InvalidArgument,
             std::string(what) + " requires an integer base >= " + std::to_string(static_cast<int>(min_base)));
}

// Normalised strict prefix maxima of f_b over [0, (d+1)^levels); runs from 0 to 1.
std::vector<double> detail_profile(const WaveSpec& spec, int levels) {
    if (levels <= 0) return {0.0, 1.0};
    double count = std::pow(static_cast<double>(spec.max_digit() + 1), levels);
    require(count <= 1.0e6, "pattern: refinement level too deep");
    std::vector<double> prof;
    double best = -1.0;
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(count); ++r) {
        double v = f_b_map(r, spec);
        if (v > best) {
            prof.push_back(v);
            best = v;
        }
    }
    for (auto& v : prof) v /= best;
    return prof;
}

std::vector<double> lattice_values(const WaveSpec& spec, const std::vector<std::int64_t>& js) {
    const auto p = static_cast<std::int64_t>(spec.base);
    const int level = std::max(spec.n_digits - 2, 0);
    std::int64_t unit = 1;
    for (int i = 0; i < level; ++i) unit *= p;
    std::vector<double> out;
    out.reserve(js.size());
    for (auto j : js) out.push_back(f_b_map(j * unit, spec));
    return out;
}

std::vector<double> cumulative(const std::vector<double>& legs) {
    std::vector<double> out{0.0};
    for (double l : legs) out.push_back(out.back() + l);
    return out;
}

}  // namespace

std::string_view to_string(PatternKind kind) {
    switch (kind) {
        case PatternKind::Impulse: return "impulse";
        case PatternKind::Zigzag: return "zigzag";
        case PatternKind::Flat: return "flat";
        case PatternKind::TriangleConverging: return "triangle-converging";
        case PatternKind::TriangleExpanding: return "triangle-expanding";
        case PatternKind::Diagonal: return "diagonal";
    }
    return "unknown";
}

PatternKind parse_pattern_kind(std::string_view name) {
    const std::string n = lower(name);
    for (auto k : {PatternKind::Impulse, PatternKind::Zigzag, PatternKind::Flat, PatternKind::TriangleConverging,
                   PatternKind::TriangleExpanding, PatternKind::Diagonal}) {
        if (n == to_string(k)) return k;
    }
    fail(ErrorCode::InvalidArgument, "unknown pattern kind '" + std::string(name) + "'");
}

int segment_signature(PatternKind kind) {
    return (kind == PatternKind::Zigzag || kind == PatternKind::Flat) ? 3 : 5;
}

bool is_motive(PatternKind kind) { return kind == PatternKind::Impulse || kind == PatternKind::Diagonal; }

WaveSeries pattern(PatternKind kind, const WaveSpec& spec, int trend, int refine) {
    spec.validate();
    require(trend == 1 || trend == -1, "pattern: trend must be +1 or -1");
    require(refine >= 0, "pattern: refine must be nonnegative");
    const double s = is_motive(kind) ? trend : -trend;
    const double d = spec.max_digit();
    auto rho = [&](int k) { return std::pow(spec.base, spec.b_frac * k); };

    std::vector<double> anchors;
    switch (kind) {
        case PatternKind::Impulse:
        case PatternKind::Zigzag: {
            require_lattice_base(spec, to_string(kind), 3.0);
            if (!(std::pow(spec.base, spec.b_frac) < spec.base - 1.0))
                fail(ErrorCode::InvalidArgument,
                     std::string(to_string(kind)) + " requires base^b < base - 1 so that carries retrace");
            const auto p = static_cast<std::int64_t>(spec.base);
            const std::int64_t count = (kind == PatternKind::Impulse ? 3 : 2) * p;
            std::vector<std::int64_t> js;
            for (std::int64_t j = 0; j < count; ++j) js.push_back(j);
            anchors = lattice_values(spec, js);
            break;
        }
        case PatternKind::Flat: {
            require_lattice_base(spec, to_string(kind), 2.0);
            const auto p = static_cast<std::int64_t>(spec.base);
            std::vector<std::int64_t> js;
            for (std::int64_t j = 0; j < p; ++j) js.push_back(j);
            for (std::int64_t j = p - 2; j >= 0; --j) js.push_back(j);
            for (std::int64_t j = 1; j < p; ++j) js.push_back(j);
            anchors = lattice_values(spec, js);
            break;
        }
        case PatternKind::Diagonal: {
            require(spec.n_digits >= 4, "diagonal requires n_digits >= 4");
            const int L = spec.n_digits - 1;
            anchors = cumulative({d * rho(L), -d * rho(L - 2), d * rho(L - 1), -d * rho(L - 3), d * rho(L - 2)});
            break;
        }
        case PatternKind::TriangleConverging:
        case PatternKind::TriangleExpanding: {
            if (spec.integer_base())
                fail(ErrorCode::InvalidArgument, "triangle patterns require a non-integer (rational) base");
            require(spec.n_digits >= 5, "triangle patterns require n_digits >= 5");
            const int L = spec.n_digits - 1;
            std::vector<double> legs;
            for (int i = 0; i < 5; ++i) {
                int k = kind == PatternKind::TriangleConverging ? L - i : L - 4 + i;
                legs.push_back((i % 2 == 0 ? 1.0 : -1.0) * d * rho(k));
            }
            anchors = cumulative(legs);
            break;
        }
    }
    for (auto& a : anchors) a *= s;

    const auto prof = detail_profile(spec, refine);
    WaveSeries out;
    auto push = [&](double v) { out.points.push_back({static_cast<std::int64_t>(out.points.size()), v}); };
    push(anchors.front());
    for (std::size_t i = 1; i < anchors.size(); ++i) {
        const double a = anchors[i - 1], b = anchors[i];
        for (std::size_t k = 1; k + 1 < prof.size(); ++k) push(a + (b - a) * prof[k]);
        push(b);
    }
    return out;
}

const std::vector<PatternPreset>& pattern_presets() {
    static const std::vector<PatternPreset> presets{
        {PatternKind::Impulse, 3.0, 0.5, 6},
        {PatternKind::Impulse, 5.0, 0.5, 6},
        {PatternKind::Zigzag, 3.0, 0.5, 6},
        {PatternKind::Zigzag, 5.0, 0.5, 6},
        {PatternKind::Flat, 3.0, 0.5, 6},
        {PatternKind::Flat, 2.0, 1.5, 6},
        {PatternKind::Diagonal, 3.0, 0.5, 6},
        {PatternKind::Diagonal, 2.0, 1.5, 6},
        {PatternKind::TriangleConverging, 1.5, 0.5, 6},
        {PatternKind::TriangleConverging, 2.5, 0.8, 7},
        {PatternKind::TriangleExpanding, 1.5, 0.5, 6},
        {PatternKind::TriangleExpanding, 2.5, 0.8, 7},
    };
    return presets;
}

}  // namespace padiclab::pricemap
