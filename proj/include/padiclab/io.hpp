// SPDX-License-Identifier: MIT
//
// Output formatting shared by the library and the command line: CSV with
// '#' metadata, JSON, native SVG plots, and key=value / JSON settings files.
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "padiclab/pricemap.hpp"

namespace padiclab::io {

/// %.17g, so values round-trip exactly.
std::string format_double(double v);

/// One "# key: value" line per entry, in key order.
void write_metadata(std::ostream& os, const std::map<std::string, std::string>& meta);

/// Header "r,value" followed by one row per point.
void write_series_csv(std::ostream& os, const pricemap::WaveSeries& s, const std::map<std::string, std::string>& meta = {});

/// {"meta": {...}, "r": [...], "value": [...]}
std::string series_to_json(const pricemap::WaveSeries& s, const std::map<std::string, std::string>& meta = {});

struct Polyline {
    std::vector<double> x;
    std::vector<double> y;
    std::string colour = "#1f4e9c";
};

/// Self-contained SVG with a fixed 800x480 viewBox, axis ticks and one
/// polyline per entry.
std::string svg_plot(const std::vector<Polyline>& lines, const std::string& title);

/// Settings as ordered key/value pairs. Accepts "key = value" lines with '#'
/// comments, or a flat JSON object when the first non-blank character is '{'.
std::vector<std::pair<std::string, std::string>> parse_settings(const std::string& text);
std::vector<std::pair<std::string, std::string>> read_settings(const std::string& path);

/// Whole file as a string; Io error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace padiclab::io
