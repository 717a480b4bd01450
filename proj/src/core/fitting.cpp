// SPDX-License-Identifier: MIT
#include "padiclab/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "padiclab/error.hpp"
#include "padiclab/io.hpp"

namespace padiclab::fitting {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') quoted = !quoted;
        else if (c == ',' && !quoted) {
            out.push_back(cell);
            cell.clear();
        } else if (c != '\r') {
            cell += c;
        }
    }
    out.push_back(cell);
    for (auto& s : out) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    }
    return out;
}

bool parse_double(const std::string& s, double& v) {
    if (s.empty()) return false;
    try {
        std::size_t used = 0;
        v = std::stod(s, &used);
        return used == s.size() && std::isfinite(v);
    } catch (const std::exception&) {
        return false;
    }
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<int> line_numbers;
};

Table parse_table(const std::string& text, const std::string& source) {
    Table t;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
        auto cells = split_csv_line(line);
        if (!have_header) {
            t.header = cells;
            have_header = true;
            continue;
        }
        if (cells.size() != t.header.size())
            fail(ErrorCode::Io, source + ": line " + std::to_string(lineno) + ": expected " +
                                    std::to_string(t.header.size()) + " fields, found " + std::to_string(cells.size()));
        t.rows.push_back(std::move(cells));
        t.line_numbers.push_back(lineno);
    }
    if (t.rows.empty()) fail(ErrorCode::Io, source + ": no data rows");
    return t;
}

std::size_t column_index(const Table& t, const std::string& name, const std::string& source) {
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        std::string h = t.header[i];
        std::string a = h, b = name;
        std::transform(a.begin(), a.end(), a.begin(), [](unsigned char c) { return std::tolower(c); });
        std::transform(b.begin(), b.end(), b.begin(), [](unsigned char c) { return std::tolower(c); });
        if (a == b) return i;
    }
    fail(ErrorCode::Io, source + ": missing column '" + name + "'");
}

std::vector<double> numeric_column(const Table& t, std::size_t col, const std::string& name, const std::string& source) {
    std::vector<double> out;
    out.reserve(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        double v = 0.0;
        if (!parse_double(t.rows[i][col], v))
            fail(ErrorCode::Io, source + ": line " + std::to_string(t.line_numbers[i]) + ": column '" + name +
                                    "' is not a finite number: '" + t.rows[i][col] + "'");
        out.push_back(v);
    }
    return out;
}

struct GridPoint {
    double base;
    double b;
    std::int64_t t0;
};

struct PointFit {
    bool degenerate = false;
    double A = 0.0, C = 0.0, rmse = 0.0;
};

}  // namespace

PriceSeries parse_series(const std::string& text, const std::string& source, const std::string& column,
                         const std::string& time_column) {
    Table t = parse_table(text, source);
    PriceSeries s;
    s.source = source;
    s.prices = numeric_column(t, column_index(t, column, source), column, source);

    bool has_time = false;
    std::size_t tcol = 0;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        std::string h = t.header[i], n = time_column;
        std::transform(h.begin(), h.end(), h.begin(), [](unsigned char c) { return std::tolower(c); });
        std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
        if (!time_column.empty() && h == n) {
            has_time = true;
            tcol = i;
        }
    }
    if (!has_time) {
        for (std::size_t i = 0; i < t.rows.size(); ++i) s.timestamps.push_back(std::to_string(i));
        return s;
    }
    bool numeric = true;
    std::vector<double> tv;
    for (const auto& row : t.rows) {
        double v = 0.0;
        numeric = numeric && parse_double(row[tcol], v);
        tv.push_back(v);
        s.timestamps.push_back(row[tcol]);
    }
    for (std::size_t i = 1; i < s.timestamps.size(); ++i) {
        bool increasing = numeric ? tv[i] > tv[i - 1] : s.timestamps[i] > s.timestamps[i - 1];
        if (!increasing)
            fail(ErrorCode::Io, source + ": line " + std::to_string(t.line_numbers[i]) +
                                    ": timestamps must increase strictly");
    }
    return s;
}

PriceSeries load_series(const std::string& path, const std::string& column, const std::string& time_column) {
    return parse_series(io::read_file(path), path, column, time_column);
}

std::vector<std::array<double, 4>> load_ohlc(const std::string& path, const OhlcColumns& cols) {
    Table t = parse_table(io::read_file(path), path);
    const std::array<std::string, 4> names{cols.open, cols.low, cols.high, cols.close};
    std::array<std::vector<double>, 4> data;
    for (std::size_t k = 0; k < 4; ++k) data[k] = numeric_column(t, column_index(t, names[k], path), names[k], path);
    std::vector<std::array<double, 4>> out(t.rows.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t k = 0; k < 4; ++k) out[i][k] = data[k][i];
    return out;
}

std::vector<double> FitGrid::b_values() const {
    validate();
    const auto count = static_cast<std::size_t>(std::floor((b_max - b_min) / b_step + 1e-9)) + 1;
    std::vector<double> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(std::round((b_min + static_cast<double>(i) * b_step) * 1e12) / 1e12);
    return out;
}

void FitGrid::validate() const {
    require(!bases.empty(), "fit grid: no bases");
    for (double b : bases) require(std::isfinite(b) && b > 1.0, "base must exceed 1");
    require(std::isfinite(b_min) && std::isfinite(b_max) && b_min > 0.0 && b_max >= b_min, "fit grid: need 0 < b_min <= b_max");
    require(std::isfinite(b_step) && b_step > 0.0, "fit grid: b_step must be positive");
    require((b_max - b_min) / b_step < 1e6, "fit grid: too many b values");
    require(t0_begin >= 0 && t0_end > t0_begin, "fit grid: need 0 <= t0_begin < t0_end");
}

FitResult fit_padic(std::span<const double> y, const FitGrid& grid, int jobs) {
    grid.validate();
    require(y.size() >= 8, "fit_padic: series needs at least 8 points");
    require(jobs >= 1, "fit_padic: jobs must be at least 1");
    for (double v : y) require(std::isfinite(v), "fit_padic: prices must be finite");
    const std::size_t n = y.size();
    const auto bs = grid.b_values();

    double ymean = 0.0, ymax = 0.0;
    for (double v : y) {
        ymean += v;
        ymax = std::max(ymax, std::abs(v));
    }
    ymean /= static_cast<double>(n);
    double yvar = 0.0;
    for (double v : y) yvar += (v - ymean) * (v - ymean);
    const double ystd = std::sqrt(yvar / static_cast<double>(n));
    const double tie_tol = 1e-12 * ystd + 1e-15 * ymax;

    // digits for every argument the grid touches, per base
    const std::int64_t r_end = grid.t0_end + static_cast<std::int64_t>(n);
    std::vector<std::vector<std::vector<int>>> digits(grid.bases.size());
    for (std::size_t bi = 0; bi < grid.bases.size(); ++bi)
        for (std::int64_t r = 0; r < r_end; ++r) digits[bi].push_back(pricemap::expand(r, grid.bases[bi]));

    const std::size_t n_t0 = static_cast<std::size_t>(grid.t0_end - grid.t0_begin);
    const std::size_t n_base = grid.bases.size();
    std::vector<PointFit> fits(bs.size() * n_t0 * n_base);
    auto index = [&](std::size_t ib, std::size_t it, std::size_t ibase) { return (ib * n_t0 + it) * n_base + ibase; };

    auto work = [&](std::size_t ib) {
        for (std::size_t ibase = 0; ibase < n_base; ++ibase) {
            const auto w = pricemap::digit_weights(grid.bases[ibase], bs[ib], 64);
            std::vector<double> F(static_cast<std::size_t>(r_end));
            for (std::int64_t r = 0; r < r_end; ++r) {
                double v = 0.0;
                const auto& a = digits[ibase][static_cast<std::size_t>(r)];
                for (std::size_t k = 0; k < a.size(); ++k) v += a[k] * w[k];
                F[static_cast<std::size_t>(r)] = v;
            }
            for (std::size_t it = 0; it < n_t0; ++it) {
                const double* x = F.data() + grid.t0_begin + static_cast<std::int64_t>(it);
                double xm = 0.0;
                for (std::size_t t = 0; t < n; ++t) xm += x[t];
                xm /= static_cast<double>(n);
                double sxx = 0.0, sxy = 0.0, sx2 = 0.0;
                for (std::size_t t = 0; t < n; ++t) {
                    sxx += (x[t] - xm) * (x[t] - xm);
                    sxy += (x[t] - xm) * (y[t] - ymean);
                    sx2 += x[t] * x[t];
                }
                PointFit& pf = fits[index(ib, it, ibase)];
                if (!(sxx > 1e-14 * sx2)) {
                    pf.degenerate = true;
                    continue;
                }
                pf.A = sxy / sxx;
                pf.C = ymean - pf.A * xm;
                double sse = 0.0;
                for (std::size_t t = 0; t < n; ++t) {
                    double r = y[t] - (pf.A * x[t] + pf.C);
                    sse += r * r;
                }
                pf.rmse = std::sqrt(sse / static_cast<double>(n));
            }
        }
    };

    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), bs.size());
    if (threads <= 1) {
        for (std::size_t ib = 0; ib < bs.size(); ++ib) work(ib);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t k = 0; k < threads; ++k)
            pool.emplace_back([&, k] {
                for (std::size_t ib = k; ib < bs.size(); ib += threads) work(ib);
            });
        for (auto& th : pool) th.join();
    }

    FitResult res;
    bool found = false;
    for (std::size_t ib = 0; ib < bs.size(); ++ib)
        for (std::size_t it = 0; it < n_t0; ++it)
            for (std::size_t ibase = 0; ibase < n_base; ++ibase) {
                const PointFit& pf = fits[index(ib, it, ibase)];
                ++res.evaluated;
                if (pf.degenerate) {
                    ++res.skipped;
                    if (res.diagnostics.size() < 32)
                        res.diagnostics.push_back("skipped degenerate regressor at base=" + io::format_double(grid.bases[ibase]) +
                                                  " b=" + io::format_double(bs[ib]) +
                                                  " t0=" + std::to_string(grid.t0_begin + static_cast<std::int64_t>(it)));
                    continue;
                }
                if (!found || pf.rmse < res.rmse - tie_tol) {
                    found = true;
                    res.base = grid.bases[ibase];
                    res.b_frac = bs[ib];
                    res.t0 = grid.t0_begin + static_cast<std::int64_t>(it);
                    res.A = pf.A;
                    res.C = pf.C;
                    res.rmse = pf.rmse;
                }
            }
    if (res.skipped > res.diagnostics.size())
        res.diagnostics.push_back(std::to_string(res.skipped - res.diagnostics.size()) + " further degenerate grid points skipped");
    if (!found) {
        res.diagnostics.push_back("every grid point was degenerate; reporting the constant fit");
        res.base = grid.bases.front();
        res.b_frac = bs.front();
        res.t0 = grid.t0_begin;
        res.A = 0.0;
        res.C = ymean;
        double sse = 0.0;
        for (double v : y) sse += (v - ymean) * (v - ymean);
        res.rmse = std::sqrt(sse / static_cast<double>(n));
    }

    pricemap::WaveSpec spec;
    spec.base = res.base;
    spec.b_frac = res.b_frac;
    res.fitted.points.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        double x = pricemap::f_b_map(static_cast<std::int64_t>(t) + res.t0, spec);
        res.fitted.points.push_back({static_cast<std::int64_t>(t), res.A * x + res.C});
    }
    return res;
}

FitResult fit_padic(const PriceSeries& series, const FitGrid& grid, int jobs) {
    return fit_padic(std::span<const double>(series.prices), grid, jobs);
}

double rmse(std::span<const double> a, std::span<const double> b) {
    require(a.size() == b.size(), "rmse: length mismatch (" + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    if (a.empty()) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s / static_cast<double>(a.size()));
}

}  // namespace padiclab::fitting
