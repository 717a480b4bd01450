// SPDX-License-Identifier: MIT
//
// Price series loading and the grid-search fit P(t) ~ A f_b(t + t0) + C.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "padiclab/pricemap.hpp"

namespace padiclab::fitting {

struct PriceSeries {
    std::vector<std::string> timestamps;  // row numbers when the file has no time column
    std::vector<double> prices;
    std::string source;

    std::size_t size() const { return prices.size(); }
};

/// Reads `column` from a headered CSV. `time_column` is optional; when it is
/// present the timestamps must increase strictly (numerically if they all
/// parse as numbers, lexicographically otherwise).
PriceSeries load_series(const std::string& path, const std::string& column = "close",
                        const std::string& time_column = "date");

/// Parses CSV text; `source` is used in error messages.
PriceSeries parse_series(const std::string& text, const std::string& source, const std::string& column = "close",
                         const std::string& time_column = "date");

struct OhlcColumns {
    std::string open = "open";
    std::string low = "low";
    std::string high = "high";
    std::string close = "close";
};

/// One (open, low, high, close) vector per bar.
std::vector<std::array<double, 4>> load_ohlc(const std::string& path, const OhlcColumns& cols = {});

struct FitGrid {
    std::vector<double> bases{2.0, 3.0, 5.0};
    double b_min = 0.2;
    double b_max = 2.0;
    double b_step = 0.05;
    std::int64_t t0_begin = 0;
    std::int64_t t0_end = 81;  // exclusive

    std::vector<double> b_values() const;
    void validate() const;
};

struct FitResult {
    double base = 0.0;
    double b_frac = 0.0;
    std::int64_t t0 = 0;
    double A = 0.0;
    double C = 0.0;
    double rmse = 0.0;
    pricemap::WaveSeries fitted;  // r = t, value = A f_b(t + t0) + C
    std::vector<std::string> diagnostics;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
};

/// Closed-form least squares at every grid point; the winner is the first
/// point, in the order b, then t0, then base, that no later point beats by
/// more than 1e-12 * max(1, rms(y)) in rmse. Degenerate (constant) regressors
/// are skipped with a diagnostic; when every point is degenerate the result
/// is the constant fit at the first grid point. jobs > 1 spreads the grid
/// over threads without changing the result.
FitResult fit_padic(std::span<const double> y, const FitGrid& grid = {}, int jobs = 1);
FitResult fit_padic(const PriceSeries& series, const FitGrid& grid = {}, int jobs = 1);

/// Root-mean-square difference; InvalidArgument on length mismatch.
double rmse(std::span<const double> a, std::span<const double> b);

}  // namespace padiclab::fitting
