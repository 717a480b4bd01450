// SPDX-License-Identifier: MIT
#include "padiclab/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "padiclab/error.hpp"

namespace padiclab::io {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// 1, 2 or 5 times a power of ten, giving roughly `target` intervals.
double nice_step(double span, int target) {
    if (!(span > 0)) return 1.0;
    double raw = span / target;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double f = raw / mag;
    return (f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0) * mag;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_metadata(std::ostream& os, const std::map<std::string, std::string>& meta) {
    for (const auto& [k, v] : meta) os << "# " << k << ": " << v << '\n';
}

void write_series_csv(std::ostream& os, const pricemap::WaveSeries& s, const std::map<std::string, std::string>& meta) {
    write_metadata(os, meta);
    os << "r,value\n";
    for (const auto& p : s.points) os << p.r << ',' << format_double(p.value) << '\n';
}

std::string series_to_json(const pricemap::WaveSeries& s, const std::map<std::string, std::string>& meta) {
    nlohmann::ordered_json j;
    j["meta"] = meta;
    auto r = nlohmann::json::array(), v = nlohmann::json::array();
    for (const auto& p : s.points) {
        r.push_back(p.r);
        v.push_back(p.value);
    }
    j["r"] = r;
    j["value"] = v;
    return j.dump(2);
}

std::string svg_plot(const std::vector<Polyline>& lines, const std::string& title) {
    constexpr double W = 800, H = 480, left = 70, right = 20, top = 40, bottom = 50;
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto& l : lines) {
        require(l.x.size() == l.y.size(), "svg_plot: x and y lengths differ");
        for (std::size_t i = 0; i < l.x.size(); ++i) {
            if (!std::isfinite(l.x[i]) || !std::isfinite(l.y[i])) continue;
            xmin = std::min(xmin, l.x[i]);
            xmax = std::max(xmax, l.x[i]);
            ymin = std::min(ymin, l.y[i]);
            ymax = std::max(ymax, l.y[i]);
        }
    }
    if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymin -= 0.5, ymax += 0.5;
    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (W - left - right); };
    auto sy = [&](double y) { return H - bottom - (y - ymin) / (ymax - ymin) * (H - top - bottom); };

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << static_cast<int>(W) << ' ' << static_cast<int>(H) << "\" width=\"" << static_cast<int>(W)
       << "\" height=\"" << static_cast<int>(H) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
       << xml_escape(title) << "</text>\n";
    os << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    os << "<line x1=\"" << left << "\" y1=\"" << H - bottom << "\" x2=\"" << W - right << "\" y2=\"" << H - bottom << "\"/>\n";
    os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << H - bottom << "\"/>\n";
    os << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
    const double xs = nice_step(xmax - xmin, 8), ys = nice_step(ymax - ymin, 6);
    for (double t = std::ceil(xmin / xs) * xs; t <= xmax + 1e-9 * xs; t += xs) {
        os << "<line x1=\"" << sx(t) << "\" y1=\"" << H - bottom << "\" x2=\"" << sx(t) << "\" y2=\"" << H - bottom + 5
           << "\" stroke=\"black\"/>";
        os << "<text x=\"" << sx(t) << "\" y=\"" << H - bottom + 18 << "\" text-anchor=\"middle\">" << tick_label(t)
           << "</text>\n";
    }
    for (double t = std::ceil(ymin / ys) * ys; t <= ymax + 1e-9 * ys; t += ys) {
        os << "<line x1=\"" << left - 5 << "\" y1=\"" << sy(t) << "\" x2=\"" << left << "\" y2=\"" << sy(t)
           << "\" stroke=\"black\"/>";
        os << "<text x=\"" << left - 8 << "\" y=\"" << sy(t) + 4 << "\" text-anchor=\"end\">" << tick_label(t)
           << "</text>\n";
    }
    os << "</g>\n";
    for (const auto& l : lines) {
        os << "<polyline fill=\"none\" stroke=\"" << xml_escape(l.colour) << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < l.x.size(); ++i) {
            if (!std::isfinite(l.x[i]) || !std::isfinite(l.y[i])) continue;
            os << sx(l.x[i]) << ',' << sy(l.y[i]) << ' ';
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::vector<std::pair<std::string, std::string>> parse_settings(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    const std::string body = trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::ordered_json j;
        try {
            j = nlohmann::ordered_json::parse(body);
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorCode::Io, std::string("settings: invalid JSON: ") + e.what());
        }
        if (!j.is_object()) fail(ErrorCode::Io, "settings: JSON root must be an object");
        for (const auto& [k, v] : j.items()) {
            if (v.is_string()) out.emplace_back(k, v.get<std::string>());
            else if (v.is_number_integer()) out.emplace_back(k, std::to_string(v.get<long long>()));
            else if (v.is_number()) out.emplace_back(k, format_double(v.get<double>()));
            else if (v.is_boolean()) out.emplace_back(k, v.get<bool>() ? "true" : "false");
            else if (v.is_array()) {
                std::string joined;
                for (const auto& e : v) {
                    if (!joined.empty()) joined += ',';
                    joined += e.is_string() ? e.get<std::string>() : e.dump();
                }
                out.emplace_back(k, joined);
            } else {
                fail(ErrorCode::Io, "settings: unsupported JSON value for '" + k + "'");
            }
        }
        return out;
    }
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(ErrorCode::Io, "settings line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key.empty()) fail(ErrorCode::Io, "settings line " + std::to_string(lineno) + ": empty key");
        out.emplace_back(key, value);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> read_settings(const std::string& path) {
    return parse_settings(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace padiclab::io
