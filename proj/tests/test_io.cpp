// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "padiclab/error.hpp"
#include "padiclab/io.hpp"

using namespace padiclab;

TEST_CASE("doubles round trip through the text format") {
    for (double v : {0.1, 1.0 / 3, 71.03332099679080, -2.5e-300, 1e300}) CHECK(std::stod(io::format_double(v)) == v);
    CHECK(io::format_double(10.0) == "10");
}

TEST_CASE("series csv and json") {
    pricemap::WaveSeries s;
    s.points = {{0, 0.0}, {1, 1.5}, {2, 0.25}};
    std::ostringstream os;
    io::write_series_csv(os, s, {{"b", "0.5"}, {"base", "3"}});
    CHECK(os.str() == "# b: 0.5\n# base: 3\nr,value\n0,0\n1,1.5\n2,0.25\n");
    auto j = nlohmann::json::parse(io::series_to_json(s, {{"k", "v"}}));
    CHECK(j["meta"]["k"] == "v");
    CHECK(j["r"].size() == 3);
    CHECK(j["value"][1].get<double>() == 1.5);
}

TEST_CASE("svg plot is self-contained") {
    io::Polyline line;
    for (int i = 0; i < 20; ++i) {
        line.x.push_back(i);
        line.y.push_back(i * i);
    }
    auto svg = io::svg_plot({line}, "a & b");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("viewBox=\"0 0 800 480\"") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("a &amp; b") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("settings parsing") {
    auto kv = io::parse_settings("# comment\nW = 2\n\nmu=0.25 # trailing\n");
    REQUIRE(kv.size() == 2);
    CHECK(kv[0] == std::pair<std::string, std::string>{"W", "2"});
    CHECK(kv[1] == std::pair<std::string, std::string>{"mu", "0.25"});
    auto js = io::parse_settings(R"({"steps": 10, "initial": "random", "bases": [2, 3]})");
    REQUIRE(js.size() == 3);
    CHECK(js[0].second == "10");
    CHECK(js[1].second == "random");
    CHECK(js[2].second == "2,3");
    CHECK_THROWS_AS(io::parse_settings("no equals sign"), Error);
    CHECK_THROWS_AS(io::parse_settings("{ broken"), Error);
    CHECK_THROWS_AS(io::read_file("/nonexistent/path"), Error);
}
