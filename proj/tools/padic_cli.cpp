// SPDX-License-Identifier: MIT
//
// padic: command-line front end over the padiclab C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "padiclab/padiclab.h"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct Failure {
    int exit_code;
    std::string message;
};

void check(padic_status st) {
    if (st == PADIC_OK) return;
    throw Failure{st == PADIC_ERR_INVALID_ARGUMENT ? kExitUsage : kExitRuntime, padic_last_error()};
}

struct CString {
    char* p = nullptr;
    ~CString() { padic_free_string(p); }
    std::string str() const { return p ? p : ""; }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string names(const std::string& n) {
    std::string alt = n;
    for (auto& c : alt) c = c == '-' ? '_' : c;
    return alt == n ? "--" + n : "--" + n + ",--" + alt;
}

// ---- function catalogue for the callback commands --------------------------

struct FuncChoice {
    std::string name = "cubic";
    double s = 2.0;
    std::vector<double> coeffs{1.0, -2.0, 0.5, 1.0};
};

std::function<double(double)> make_function(const FuncChoice& f) {
    if (f.name == "one") return [](double) { return 1.0; };
    if (f.name == "x") return [](double x) { return x; };
    if (f.name == "pow") return [s = f.s](double x) { return std::pow(x, s); };
    if (f.name == "cubic" || f.name == "poly") {
        return [c = f.coeffs](double x) {
            double v = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
            return v;
        };
    }
    if (f.name == "exp") return [](double x) { return std::exp(x); };
    if (f.name == "sin") return [](double x) { return std::sin(x); };
    if (f.name == "cos") return [](double x) { return std::cos(x); };
    if (f.name == "gauss") return [](double x) { return std::exp(-x * x); };
    throw Failure{kExitUsage, "unknown function '" + f.name + "' (one, x, pow, cubic, poly, exp, sin, cos, gauss)"};
}

double trampoline(double x, void* user) { return (*static_cast<std::function<double(double)>*>(user))(x); }

void add_func_options(CLI::App* sub, FuncChoice& f) {
    sub->add_option("--func", f.name, "one, x, pow, cubic, poly, exp, sin, cos, gauss")->capture_default_str();
    sub->add_option("--s", f.s, "exponent for --func pow")->capture_default_str();
    sub->add_option("--coeffs", f.coeffs, "polynomial coefficients a0,a1,... for cubic/poly")
        ->delimiter(',')
        ->capture_default_str();
}

// ---- output -----------------------------------------------------------------

struct Output {
    std::string path;
    std::string format;  // csv, json, svg; empty means from the extension
    std::string title;

    std::string resolved(const std::string& fallback = "csv") const {
        if (!format.empty()) return format;
        auto dot = path.rfind('.');
        if (dot != std::string::npos) {
            std::string ext = path.substr(dot + 1);
            if (ext == "csv" || ext == "json" || ext == "svg") return ext;
        }
        return fallback;
    }

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            std::cout.flush();
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Failure{kExitRuntime, "cannot open '" + path + "' for writing"};
        out << text;
        if (!out) throw Failure{kExitRuntime, "write to '" + path + "' failed"};
    }
};

using Meta = std::vector<std::pair<std::string, std::string>>;

struct MetaView {
    std::vector<const char*> keys, values;
    padic_meta meta{};

    explicit MetaView(const Meta& m) {
        for (const auto& [k, v] : m) {
            keys.push_back(k.c_str());
            values.push_back(v.c_str());
        }
        meta = {keys.data(), values.data(), m.size()};
    }
};

std::string comment_block(const Meta& m) {
    std::string s;
    for (const auto& [k, v] : m) s += "# " + k + ": " + v + "\n";
    return s;
}

nlohmann::ordered_json meta_object(const Meta& m) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m) j[k] = v;
    return j;
}

// Key/value report rendered as CSV (with '#' metadata) or JSON.
void emit_record(const Output& out, const Meta& meta, const std::vector<std::pair<std::string, std::string>>& fields,
                 const std::string& fallback = "csv") {
    const std::string f = out.resolved(fallback);
    if (f == "json") {
        nlohmann::ordered_json j;
        j["meta"] = meta_object(meta);
        for (const auto& [k, v] : fields) j[k] = v;
        out.write(j.dump(2) + "\n");
        return;
    }
    if (f != "csv") throw Failure{kExitUsage, "format '" + f + "' is not available for this command"};
    std::string text = comment_block(meta), header, row;
    for (const auto& [k, v] : fields) {
        header += (header.empty() ? "" : ",") + k;
        row += (row.empty() ? "" : ",") + v;
    }
    out.write(text + header + "\n" + row + "\n");
}

void emit_json_report(const Output& out, const Meta& meta, const std::string& report) {
    const std::string f = out.resolved("json");
    if (f != "json") throw Failure{kExitUsage, "this command only writes json"};
    auto j = nlohmann::ordered_json::parse(report);
    nlohmann::ordered_json full;
    full["meta"] = meta_object(meta);
    for (auto& [k, v] : j.items()) full[k] = v;
    out.write(full.dump(2) + "\n");
}

void emit_series(const Output& out, const Meta& meta, padic_series* s) {
    std::unique_ptr<padic_series, decltype(&padic_series_free)> guard(s, padic_series_free);
    MetaView mv(meta);
    CString text;
    check(padic_series_format(s, out.resolved().c_str(), &mv.meta, out.title.c_str(), &text.p));
    out.write(text.str());
}

// ---- configuration ---------------------------------------------------------------

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kExitUsage, "cannot open config file '" + path + "'"};
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    std::vector<std::pair<std::string, std::string>> out;
    if (trim(text).rfind('{', 0) == 0) {
        nlohmann::ordered_json j;
        try {
            j = nlohmann::ordered_json::parse(text);
        } catch (const std::exception& e) {
            throw Failure{kExitUsage, std::string("config: invalid JSON: ") + e.what()};
        }
        for (auto& [k, v] : j.items()) {
            std::string value;
            if (v.is_string()) value = v.get<std::string>();
            else if (v.is_boolean()) value = v.get<bool>() ? "true" : "false";
            else if (v.is_number_integer()) value = std::to_string(v.get<long long>());
            else if (v.is_number()) value = fmt(v.get<double>());
            else if (v.is_array()) {
                for (const auto& e : v) value += (value.empty() ? "" : ",") + (e.is_string() ? e.get<std::string>() : e.dump());
            } else {
                throw Failure{kExitUsage, "config: unsupported value for '" + k + "'"};
            }
            out.emplace_back(k, value);
        }
        return out;
    }
    std::istringstream lines(text);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        ++n;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw Failure{kExitUsage, "config line " + std::to_string(n) + ": expected key = value"};
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

// Config entries become flags placed directly after the subcommand name, so
// anything given on the command line (which comes later) wins.
std::vector<std::string> inject_config(const std::vector<std::string>& args, const std::vector<std::string>& subcommands) {
    std::string config;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (config.empty()) return rest;
    std::vector<std::string> flags;
    for (const auto& [k, v] : read_config(config)) flags.push_back("--" + k + "=" + v);
    std::vector<std::string> out;
    bool inserted = false;
    for (const auto& a : rest) {
        out.push_back(a);
        if (!inserted && std::find(subcommands.begin(), subcommands.end(), a) != subcommands.end()) {
            out.insert(out.end(), flags.begin(), flags.end());
            inserted = true;
        }
    }
    return out;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PADIC_LAB_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && end != env) return v;
        throw Failure{kExitUsage, "PADIC_LAB_SEED must be a nonnegative integer"};
    }
    return 1;
}

Meta collect_meta(const CLI::App* sub, std::uint64_t seed) {
    Meta m{{"tool", "padic"}, {"version", padic_version()}, {"command", sub->get_name()}, {"seed", std::to_string(seed)}};
    for (const CLI::Option* opt : sub->get_options()) {
        const std::string name = opt->get_single_name();
        if (name.empty() || name == "help") continue;
        std::string value;
        if (opt->count() > 0) {
            for (const auto& r : opt->results()) value += (value.empty() ? "" : ",") + r;
        } else {
            value = opt->get_default_str();
        }
        if (!value.empty()) m.emplace_back(name, value);
    }
    return m;
}

std::vector<double> read_column(const std::string& path, const std::string& column, const std::string& time_column) {
    padic_price_series* ps = nullptr;
    check(padic_load_series(path.c_str(), column.c_str(), time_column.c_str(), &ps));
    std::unique_ptr<padic_price_series, decltype(&padic_price_series_free)> guard(ps, padic_price_series_free);
    const double* v = padic_price_series_values(ps);
    return std::vector<double>(v, v + padic_price_series_length(ps));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"padic: p-adic price maps, q-calculus and supercoherent-state tools"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    Output out;
    std::uint64_t seed = 1;
    bool seed_given = false;
    app.add_option("-o,--out", out.path, "output path (default stdout)");
    app.add_option("--format", out.format, "csv, json or svg (default from --out extension)")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    app.add_option("--title", out.title, "plot title for svg output");
    auto* seed_opt = app.add_option("--seed", seed, "random seed (default $PADIC_LAB_SEED or 1)");
    app.add_option("--config", "key=value or JSON file presetting flags; explicit flags win");

    // expand
    auto* expand = app.add_subcommand("expand", "base-p digits of an integer");
    std::int64_t ex_n = 0;
    std::uint64_t ex_p = 3;
    bool ex_any = false;
    expand->add_option("--n", ex_n, "integer to expand")->required();
    expand->add_option("--p", ex_p, "base")->capture_default_str();
    expand->add_flag(names("any-base"), ex_any, "allow composite bases");

    // norm
    auto* norm = app.add_subcommand("norm", "p-adic norm of num/den");
    std::int64_t nm_num = 1, nm_den = 1;
    std::uint64_t nm_p = 3;
    norm->add_option("--num", nm_num)->required();
    norm->add_option("--den", nm_den)->capture_default_str();
    norm->add_option("--p", nm_p)->capture_default_str();

    // map
    auto* map = app.add_subcommand("map", "f_b(r)");
    double mp_base = 3, mp_b = 0.5;
    std::int64_t mp_r = 0;
    map->add_option("--base", mp_base)->capture_default_str();
    map->add_option("--b", mp_b)->capture_default_str();
    map->add_option("--r", mp_r)->required();

    // wave
    auto* wave = app.add_subcommand("wave", "f_b over [r_begin, r_end), or a seeded random signal");
    double wv_base = 3, wv_b = 0.5;
    int wv_n = 6;
    std::int64_t wv_begin = 0, wv_end = -1;
    std::size_t wv_random = 0;
    wave->add_option("--base", wv_base)->capture_default_str();
    wave->add_option("--b", wv_b)->capture_default_str();
    wave->add_option("--n", wv_n, "digit count N")->capture_default_str();
    wave->add_option(names("r-begin"), wv_begin)->capture_default_str();
    wave->add_option(names("r-end"), wv_end, "exclusive; negative means ceil(base^N)")->capture_default_str();
    wave->add_option("--random", wv_random, "emit this many f_b(r) with r uniform in [0, base^N)");

    // pattern
    auto* pattern = app.add_subcommand("pattern", "Elliott-style pattern built from f_b");
    std::string pt_kind = "impulse";
    double pt_base = 3, pt_b = 0.5;
    int pt_n = 6, pt_trend = 1, pt_refine = 0;
    pattern->add_option("--kind", pt_kind, "impulse, zigzag, flat, triangle-converging, triangle-expanding, diagonal")
        ->capture_default_str();
    auto* pt_base_opt = pattern->add_option("--base", pt_base, "default 3, or 1.5 for triangles")->capture_default_str();
    pattern->add_option("--b", pt_b)->capture_default_str();
    pattern->add_option("--n", pt_n)->capture_default_str();
    pattern->add_option("--trend", pt_trend)->check(CLI::IsMember({-1, 1}))->capture_default_str();
    pattern->add_option("--refine", pt_refine, "levels of fractal detail per leg")->capture_default_str();

    // envelope
    auto* envelope = app.add_subcommand("envelope", "f_b of a quantised harmonic signal");
    FuncChoice env_f;
    env_f.name = "sin";
    double env_tmax = 4 * std::numbers::pi, env_scale = 100, env_base = 3, env_b = 0.5;
    std::size_t env_samples = 1000;
    add_func_options(envelope, env_f);
    envelope->add_option(names("t-max"), env_tmax, "samples span [0, t_max]")->capture_default_str();
    envelope->add_option("--samples", env_samples)->capture_default_str();
    envelope->add_option("--scale", env_scale)->capture_default_str();
    envelope->add_option("--base", env_base)->capture_default_str();
    envelope->add_option("--b", env_b)->capture_default_str();

    // qderiv
    auto* qderiv = app.add_subcommand("qderiv", "D_q f(x), or D_rq f(x) with --r");
    FuncChoice qd_f;
    double qd_x = 1.0, qd_q = 0.5, qd_r = 0;
    add_func_options(qderiv, qd_f);
    qderiv->add_option("--x", qd_x)->capture_default_str();
    qderiv->add_option("--q", qd_q)->capture_default_str();
    auto* qd_r_opt = qderiv->add_option("--r", qd_r, "second deformation parameter");

    // jackson
    auto* jack = app.add_subcommand("jackson", "Jackson integral of f on [0, c]");
    FuncChoice jk_f;
    double jk_c = 1.0, jk_q = 0.5;
    int jk_terms = 0;
    add_func_options(jack, jk_f);
    jack->add_option("--c", jk_c)->capture_default_str();
    jack->add_option("--q", jk_q)->capture_default_str();
    jack->add_option("--terms", jk_terms, "also report the bare lattice sum over this many terms");

    // qqseries
    auto* qq = app.add_subcommand("qqseries", "q-Taylor double series for int_0^c f exp(b [x]_q) dx");
    FuncChoice qq_f;
    double qq_c = 1.0, qq_b = 0.2, qq_q = 0.9;
    int qq_m = 8, qq_n = 12;
    add_func_options(qq, qq_f);
    qq->add_option("--c", qq_c)->capture_default_str();
    qq->add_option("--b", qq_b)->capture_default_str();
    qq->add_option("--q", qq_q)->capture_default_str();
    qq->add_option(names("m-max"), qq_m)->capture_default_str();
    qq->add_option(names("n-max"), qq_n)->capture_default_str();

    // algebra-check
    auto* alg = app.add_subcommand("algebra-check", "ladder-operator relations on monomials");
    int al_degree = 8;
    double al_q = 0.5, al_r = 0;
    alg->add_option("--degree", al_degree)->capture_default_str();
    alg->add_option("--q", al_q)->capture_default_str();
    auto* al_r_opt = alg->add_option("--r", al_r, "selects the two-parameter algebra");

    // operators
    auto* ops = app.add_subcommand("operators", "site algebra report and chain spectrum");
    int op_sites = 1;
    double op_W = 1, op_U = 1, op_mu = 0.5;
    ops->add_option("--sites", op_sites)->capture_default_str();
    ops->add_option("--W", op_W)->capture_default_str();
    ops->add_option("--U", op_U)->capture_default_str();
    ops->add_option("--mu", op_mu)->capture_default_str();

    // scs
    auto* scs = app.add_subcommand("scs", "supercoherent state, bracket and operator symbols");
    double Ez = 0, Ep = 0, Em = 0, hz = 0, hp = 0, hm = 0, sc_alpha = 0;
    scs->add_option("--Ez", Ez)->capture_default_str();
    scs->add_option("--Ep", Ep, "E+")->capture_default_str();
    scs->add_option("--Em", Em, "E-")->capture_default_str();
    scs->add_option("--hz", hz)->capture_default_str();
    scs->add_option("--hp", hp, "h+")->capture_default_str();
    scs->add_option("--hm", hm, "h-")->capture_default_str();
    scs->add_option("--alpha", sc_alpha, "weight of the bilinear part in the spin symbols")->capture_default_str();

    // simulate
    auto* sim = app.add_subcommand("simulate", "Metropolis market simulation");
    padic_market_config mc;
    padic_market_config_default(&mc);
    std::string sim_initial = mc.initial_random ? "random" : "empty";
    sim->add_option(names("n-agents"), mc.n_agents)->capture_default_str();
    sim->add_option("--W", mc.W)->capture_default_str();
    sim->add_option("--U", mc.U)->capture_default_str();
    sim->add_option("--mu", mc.mu)->capture_default_str();
    sim->add_option(names("beta-temp"), mc.beta_temp, "inverse temperature (inf allowed)")->capture_default_str();
    sim->add_option("--steps", mc.steps)->capture_default_str();
    sim->add_option("--impact", mc.impact)->capture_default_str();
    sim->add_option("--price0", mc.price0)->capture_default_str();
    sim->add_option("--initial", sim_initial)->check(CLI::IsMember({"empty", "random"}))->capture_default_str();

    // fit
    auto* fit = app.add_subcommand("fit", "grid-search fit of A f_b(t + t0) + C to a price column");
    std::string ft_input, ft_column = "close", ft_time = "date", ft_overlay;
    std::vector<double> ft_bases{2, 3, 5};
    padic_fit_grid grid;
    padic_fit_grid_default(&grid);
    int ft_jobs = 1;
    fit->add_option("--input", ft_input, "CSV with a header row")->required();
    fit->add_option("--column", ft_column)->capture_default_str();
    fit->add_option(names("time-column"), ft_time)->capture_default_str();
    fit->add_option("--bases", ft_bases)->delimiter(',')->capture_default_str();
    fit->add_option(names("b-min"), grid.b_min)->capture_default_str();
    fit->add_option(names("b-max"), grid.b_max)->capture_default_str();
    fit->add_option(names("b-step"), grid.b_step)->capture_default_str();
    fit->add_option(names("t0-begin"), grid.t0_begin)->capture_default_str();
    fit->add_option(names("t0-end"), grid.t0_end)->capture_default_str();
    fit->add_option("--jobs", ft_jobs, "worker threads; results do not depend on it")->capture_default_str();
    fit->add_option("--overlay", ft_overlay, "also write data and fitted series (.csv or .svg)");

    // embed
    auto* embed = app.add_subcommand("embed", "delay embedding of a price column, or OHLC bars");
    std::string em_input, em_column = "close";
    int em_m = 3, em_stride = 1;
    bool em_ohlc = false;
    embed->add_option("--input", em_input)->required();
    embed->add_option("--column", em_column)->capture_default_str();
    embed->add_option("--m", em_m)->capture_default_str();
    embed->add_option("--stride", em_stride)->capture_default_str();
    embed->add_flag("--ohlc", em_ohlc, "emit one (open, low, high, close) vector per bar");

    std::vector<std::string> subnames;
    for (const auto* s : app.get_subcommands({})) subnames.push_back(s->get_name());

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = inject_config(args, subnames);
        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            std::cerr << "padic: " << e.what() << "\n";
            if (e.get_exit_code() == 0) return 0;
            return kExitUsage;
        }
        seed_given = seed_opt->count() > 0;
        if (!seed_given) seed = default_seed();

        CLI::App* sub = app.get_subcommands().front();
        Meta meta = collect_meta(sub, seed);
        if (out.title.empty()) out.title = sub->get_name();

        if (sub == expand) {
            std::vector<int> digits(64);
            std::size_t len = 0;
            int val = -1;
            check(padic_digits(ex_n, ex_p, ex_any ? 1 : 0, digits.data(), digits.size(), &len, &val));
            digits.resize(len);
            std::string d;
            for (int x : digits) d += (d.empty() ? "" : " ") + std::to_string(x);
            emit_record(out, meta, {{"digits", d}, {"valuation", val < 0 ? "none" : std::to_string(val)}});
        } else if (sub == norm) {
            int has = 0, val = 0;
            double nv = 0;
            check(padic_norm(nm_num, nm_den, nm_p, &has, &val, &nv));
            emit_record(out, meta, {{"valuation", has ? std::to_string(val) : "none"}, {"norm", fmt(nv)}});
        } else if (sub == map) {
            double v = 0;
            check(padic_f_b(mp_r, mp_base, mp_b, &v));
            const std::string f = out.resolved("csv");
            if (f == "json") emit_record(out, meta, {{"value", fmt(v)}}, "json");
            else out.write(comment_block(meta) + fmt(v) + "\n");
        } else if (sub == wave) {
            padic_series* s = nullptr;
            if (wv_random > 0) check(padic_random_signal(wv_base, wv_b, wv_n, wv_random, seed, &s));
            else check(padic_wave_series(wv_base, wv_b, wv_n, wv_begin, wv_end, &s));
            if (wv_random > 0) meta.emplace_back("distribution", "r uniform on [0, ceil(base^N))");
            emit_series(out, meta, s);
        } else if (sub == pattern) {
            const bool triangle = pt_kind.rfind("triangle", 0) == 0;
            if (triangle && pt_base_opt->count() == 0) {
                pt_base = 1.5;
                for (auto& [k, v] : meta)
                    if (k == "base") v = "1.5";
            }
            padic_series* s = nullptr;
            check(padic_pattern(pt_kind.c_str(), pt_base, pt_b, pt_n, pt_trend, pt_refine, &s));
            emit_series(out, meta, s);
        } else if (sub == envelope) {
            if (env_samples < 2) throw Failure{kExitUsage, "--samples must be at least 2"};
            auto g = make_function(env_f);
            std::vector<double> vals(env_samples);
            for (std::size_t i = 0; i < env_samples; ++i)
                vals[i] = g(env_tmax * static_cast<double>(i) / static_cast<double>(env_samples - 1));
            padic_series* s = nullptr;
            check(padic_envelope(vals.data(), vals.size(), env_base, env_b, env_scale, &s));
            emit_series(out, meta, s);
        } else if (sub == qderiv) {
            auto f = make_function(qd_f);
            double v = 0;
            if (qd_r_opt->count() > 0) check(padic_d_rq(trampoline, &f, qd_x, qd_r, qd_q, &v));
            else check(padic_d_q(trampoline, &f, qd_x, qd_q, &v));
            emit_record(out, meta, {{"value", fmt(v)}});
        } else if (sub == jack) {
            auto f = make_function(jk_f);
            double v = 0;
            check(padic_jackson_integral(trampoline, &f, jk_c, jk_q, &v));
            std::vector<std::pair<std::string, std::string>> fields{{"value", fmt(v)}};
            if (jk_terms > 0) {
                double s = 0;
                check(padic_small_q_series(trampoline, &f, jk_c, jk_q, jk_terms, &s));
                fields.emplace_back("lattice_sum", fmt(s));
            }
            emit_record(out, meta, fields);
        } else if (sub == qq) {
            auto f = make_function(qq_f);
            double v = 0;
            int div = 0;
            CString diag;
            check(padic_qq_series(trampoline, &f, qq_c, qq_b, qq_q, qq_m, qq_n, &v, &div, &diag.p));
            if (div) std::cerr << "padic: warning: " << diag.str() << "\n";
            emit_record(out, meta, {{"value", fmt(v)}, {"diverging", div ? "true" : "false"}});
        } else if (sub == alg) {
            CString rep;
            check(padic_algebra_check(al_degree, al_q, al_r_opt->count() > 0 ? al_r : NAN, &rep.p));
            emit_json_report(out, meta, rep.str());
        } else if (sub == ops) {
            CString rep;
            check(padic_operators_report(&rep.p));
            auto j = nlohmann::ordered_json::parse(rep.str());
            std::vector<double> ev(static_cast<std::size_t>(1) << (2 * std::clamp(op_sites, 1, 4)));
            std::size_t len = 0;
            check(padic_hamiltonian_spectrum(op_sites, op_W, op_U, op_mu, ev.data(), ev.size(), &len));
            ev.resize(std::min(len, ev.size()));
            j["spectrum"] = ev;
            emit_json_report(out, meta, j.dump());
        } else if (sub == scs) {
            const double E[3] = {Ez, Ep, Em}, h[3] = {hz, hp, hm};
            CString rep, sym;
            check(padic_scs_report(E, h, &rep.p));
            const double Ec[6] = {Ez, 0, Ep, 0, Em, 0}, hc[6] = {hz, 0, hp, 0, hm, 0};
            check(padic_op_symbols(Ec, hc, sc_alpha, nullptr, &sym.p));
            auto j = nlohmann::ordered_json::parse(rep.str());
            j["symbols"] = nlohmann::ordered_json::parse(sym.str());
            emit_json_report(out, meta, j.dump());
        } else if (sub == sim) {
            mc.seed = seed;
            mc.initial_random = sim_initial == "random" ? 1 : 0;
            padic_market_trace* t = nullptr;
            check(padic_simulate_market(&mc, &t));
            std::unique_ptr<padic_market_trace, decltype(&padic_trace_free)> guard(t, padic_trace_free);
            const std::string f = out.resolved();
            if (f == "svg") {
                std::vector<double> price(padic_trace_length(t));
                for (std::size_t i = 0; i < price.size(); ++i)
                    check(padic_trace_row(t, i, nullptr, nullptr, nullptr, nullptr, &price[i]));
                CString svg;
                check(padic_svg_plot(price.data(), price.size(), nullptr, 0, out.title.c_str(), &svg.p));
                out.write(svg.str());
            } else if (f == "csv") {
                MetaView mv(meta);
                CString csv;
                check(padic_trace_csv(t, &mv.meta, &csv.p));
                out.write(csv.str());
            } else {
                throw Failure{kExitUsage, "simulate writes csv or svg"};
            }
        } else if (sub == fit) {
            auto y = read_column(ft_input, ft_column, ft_time);
            grid.bases = ft_bases.data();
            grid.n_bases = ft_bases.size();
            padic_fit* res = nullptr;
            check(padic_fit_padic(y.data(), y.size(), &grid, ft_jobs, &res));
            std::unique_ptr<padic_fit, decltype(&padic_fit_free)> guard(res, padic_fit_free);
            MetaView mv(meta);
            CString js;
            check(padic_fit_json(res, &mv.meta, &js.p));
            const std::string f = out.resolved("json");
            if (f != "json") throw Failure{kExitUsage, "fit writes json; use --overlay for csv or svg"};
            out.write(js.str());
            if (!ft_overlay.empty()) {
                Output ov{ft_overlay, "", "fit overlay"};
                const double* fv = padic_fit_values(res);
                const std::string of = ov.resolved();
                if (of == "svg") {
                    CString svg;
                    check(padic_svg_plot(y.data(), y.size(), fv, padic_fit_length(res), ov.title.c_str(), &svg.p));
                    ov.write(svg.str());
                } else if (of == "csv") {
                    std::string text = comment_block(meta) + "t,price,fitted\n";
                    for (std::size_t i = 0; i < y.size(); ++i)
                        text += std::to_string(i) + "," + fmt(y[i]) + "," + fmt(fv[i]) + "\n";
                    ov.write(text);
                } else {
                    throw Failure{kExitUsage, "--overlay must end in .csv or .svg"};
                }
            }
        } else if (sub == embed) {
            std::vector<double> rows;
            int m = em_m;
            if (em_ohlc) {
                std::size_t bars = 0;
                check(padic_load_ohlc(em_input.c_str(), nullptr, 0, &bars));
                rows.resize(bars * 4);
                check(padic_load_ohlc(em_input.c_str(), rows.data(), rows.size(), &bars));
                m = 4;
            } else {
                auto x = read_column(em_input, em_column, "");
                std::size_t count = 0;
                check(padic_delay_embed(x.data(), x.size(), em_m, em_stride, nullptr, 0, &count));
                rows.resize(count * static_cast<std::size_t>(em_m));
                check(padic_delay_embed(x.data(), x.size(), em_m, em_stride, rows.data(), rows.size(), &count));
            }
            if (out.resolved() != "csv") throw Failure{kExitUsage, "embed writes csv"};
            std::string text = comment_block(meta);
            for (int k = 0; k < m; ++k) text += (k ? ",x" : "x") + std::to_string(k);
            text += "\n";
            for (std::size_t i = 0; i < rows.size(); i += static_cast<std::size_t>(m)) {
                for (int k = 0; k < m; ++k) text += (k ? "," : "") + fmt(rows[i + static_cast<std::size_t>(k)]);
                text += "\n";
            }
            out.write(text);
        }
        return 0;
    } catch (const Failure& f) {
        std::cerr << "padic: " << f.message << "\n";
        return f.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "padic: " << e.what() << "\n";
        return kExitRuntime;
    }
}
