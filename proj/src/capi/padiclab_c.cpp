// SPDX-License-Identifier: MIT
#include "padiclab/padiclab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <map>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "padiclab/error.hpp"
#include "padiclab/fitting.hpp"
#include "padiclab/grassmann.hpp"
#include "padiclab/hubbard.hpp"
#include "padiclab/io.hpp"
#include "padiclab/jackson.hpp"
#include "padiclab/market.hpp"
#include "padiclab/padic.hpp"
#include "padiclab/pricemap.hpp"
#include "padiclab/qcalc.hpp"

struct padic_series {
    padiclab::pricemap::WaveSeries series;
};

struct padic_market_trace {
    padiclab::market::MarketTrace trace;
};

struct padic_price_series {
    padiclab::fitting::PriceSeries series;
};

struct padic_fit {
    padiclab::fitting::FitResult result;
    std::vector<double> values;
};

namespace {

using namespace padiclab;
using json = nlohmann::ordered_json;

thread_local std::string g_last_error;

padic_status to_status(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument: return PADIC_ERR_INVALID_ARGUMENT;
        case ErrorCode::Domain: return PADIC_ERR_DOMAIN;
        case ErrorCode::Convergence: return PADIC_ERR_CONVERGENCE;
        case ErrorCode::Io: return PADIC_ERR_IO;
        case ErrorCode::Range: return PADIC_ERR_RANGE;
    }
    return PADIC_ERR_INTERNAL;
}

template <class F>
padic_status guarded(F&& body) {
    g_last_error.clear();
    try {
        body();
        return PADIC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PADIC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PADIC_ERR_INTERNAL;
    }
}

void need(const void* p, const char* name) {
    if (!p) fail(ErrorCode::InvalidArgument, std::string(name) + " must not be NULL");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

qcalc::RealFn wrap(padic_real_fn f, void* user) {
    need(reinterpret_cast<const void*>(f), "f");
    return [f, user](double x) { return f(x, user); };
}

std::vector<std::pair<std::string, std::string>> meta_pairs(const padic_meta* meta) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!meta) return out;
    if (meta->count > 0) {
        need(meta->keys, "meta->keys");
        need(meta->values, "meta->values");
    }
    for (size_t i = 0; i < meta->count; ++i) {
        need(meta->keys[i], "meta key");
        need(meta->values[i], "meta value");
        out.emplace_back(meta->keys[i], meta->values[i]);
    }
    return out;
}

void write_meta(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& meta) {
    for (const auto& [k, v] : meta) os << "# " << k << ": " << v << '\n';
}

json meta_json(const std::vector<std::pair<std::string, std::string>>& meta) {
    json j = json::object();
    for (const auto& [k, v] : meta) j[k] = v;
    return j;
}

std::string svg_with_meta(const std::string& svg, const std::vector<std::pair<std::string, std::string>>& meta) {
    if (meta.empty()) return svg;
    std::string comment = "<!--\n";
    for (const auto& [k, v] : meta) {
        std::string line = k + ": " + v;
        for (auto pos = line.find("--"); pos != std::string::npos; pos = line.find("--")) line.replace(pos, 2, "- -");
        comment += line + "\n";
    }
    comment += "-->\n";
    auto pos = svg.find('\n');
    return svg.substr(0, pos + 1) + comment + svg.substr(pos + 1);
}

json mat_json(const hubbard::Mat4& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json r = json::array();
        for (int j = 0; j < 4; ++j) r.push_back(m(i, j));
        rows.push_back(r);
    }
    return rows;
}

void mat_out(const hubbard::Mat4& m, double out[16]) {
    need(out, "out");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i * 4 + j] = m(i, j);
}

json complex_json(std::complex<double> c) { return json::array({c.real(), c.imag()}); }

grassmann::Field3 field(const double v[3]) {
    need(v, "field");
    return {v[0], v[1], v[2]};
}

hubbard::CField3 cfield(const double v[6]) {
    need(v, "field");
    return {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}};
}

}  // namespace

extern "C" {

const char* padic_version(void) { return PADICLAB_VERSION; }

const char* padic_last_error(void) { return g_last_error.c_str(); }

void padic_free_string(char* s) { std::free(s); }

padic_status padic_is_prime(uint64_t n, int* out) {
    return guarded([&] {
        need(out, "out");
        *out = padic::is_prime(n) ? 1 : 0;
    });
}

padic_status padic_digits(int64_t n, uint64_t base, int any_base, int* digits, size_t cap, size_t* len, int* valuation) {
    return guarded([&] {
        need(len, "len");
        auto d = padic::digits(n, base, any_base ? padic::BaseCheck::AnyBase : padic::BaseCheck::Strict);
        *len = d.digits.size();
        if (cap > 0) need(digits, "digits");
        for (size_t i = 0; i < d.digits.size() && i < cap; ++i) digits[i] = d.digits[i];
        if (valuation) *valuation = d.valuation ? *d.valuation : -1;
    });
}

padic_status padic_norm(int64_t num, int64_t den, uint64_t p, int* has_valuation, int* valuation, double* norm) {
    return guarded([&] {
        need(norm, "norm");
        auto r = padic::padic_norm(padic::Rational(num, den), padic::Prime(p));
        *norm = r.norm;
        if (has_valuation) *has_valuation = r.valuation.has_value() ? 1 : 0;
        if (valuation) *valuation = r.valuation.value_or(0);
    });
}

padic_status padic_q_number(double x, double q, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = qcalc::q_number(x, q);
    });
}

padic_status padic_q_number2(double x, double r, double q, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = qcalc::q_number(x, r, q);
    });
}

padic_status padic_q_factorial(int n, double q, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = qcalc::q_factorial(n, q);
    });
}

padic_status padic_q_pochhammer(double x, double c, double q, int m, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = qcalc::q_pochhammer(x, c, q, m);
    });
}

padic_status padic_d_q(padic_real_fn f, void* user, double x, double q, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = qcalc::d_q(wrap(f, user), x, q);
    });
}

padic_status padic_d_rq(padic_real_fn f, void* user, double x, double r, double q, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = qcalc::d_rq(wrap(f, user), x, r, q);
    });
}

padic_status padic_k_special(double E, double h, double alpha, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = qcalc::k_special({E, h, alpha});
    });
}

padic_status padic_f4(double E, double h, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = qcalc::f4(E, h);
    });
}

padic_status padic_algebra_check(int degree, double q, double r, char** out) {
    return guarded([&] {
        need(out, "out");
        qcalc::QParams qp{q, std::isnan(r) ? std::nullopt : std::optional<double>(r)};
        auto rep = qcalc::check_algebra_relations(degree, qp);
        json j;
        j["degree"] = rep.degree;
        j["two_parameter"] = rep.two_parameter;
        j["q"] = q;
        if (qp.r) j["r"] = *qp.r;
        j["sz_splus_residual"] = rep.sz_splus_residual;
        j["sz_sminus_residual"] = rep.sz_sminus_residual;
        j["commutator_residual"] = rep.commutator_residual;
        j["classical_deviation"] = rep.classical_deviation;
        j["printed_rhs_deviation"] = rep.printed_rhs_deviation;
        j["commutator_coefficients"] = rep.commutator_coefficients;
        *out = dup_string(j.dump(2));
    });
}

padic_status padic_jackson_integral(padic_real_fn f, void* user, double c, double q, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = jackson::jackson_integral(wrap(f, user), c, q);
    });
}

padic_status padic_small_q_series(padic_real_fn f, void* user, double c, double q, int terms, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = jackson::small_q_series(wrap(f, user), c, q, terms);
    });
}

padic_status padic_qq_series(padic_real_fn f, void* user, double c, double b, double q, int m_max, int n_max,
                             double* value, int* diverging, char** diagnostic) {
    return guarded([&] {
        need(value, "value");
        jackson::SeriesSpec spec;
        spec.c = c;
        spec.b_coef = b;
        spec.q = q;
        spec.m_max = m_max;
        spec.n_max = n_max;
        auto res = jackson::qq_series(wrap(f, user), spec);
        *value = res.value;
        if (diverging) *diverging = res.diverging ? 1 : 0;
        if (diagnostic) *diagnostic = dup_string(res.diagnostic);
    });
}

padic_status padic_padic_correspondence(int s, uint64_t p, double* jackson_value, double* shell_sum) {
    return guarded([&] {
        need(jackson_value, "jackson");
        need(shell_sum, "shell_sum");
        auto r = jackson::padic_correspondence_check(s, padic::Prime(p));
        *jackson_value = r.jackson;
        *shell_sum = r.shell_sum;
    });
}

padic_status padic_f_b(int64_t r, double base, double b, double* out) {
    return guarded([&] {
        need(out, "out");
        pricemap::WaveSpec spec;
        spec.base = base;
        spec.b_frac = b;
        *out = pricemap::f_b_map(r, spec);
    });
}

padic_status padic_wave_series(double base, double b, int n_digits, int64_t r_begin, int64_t r_end, padic_series** out) {
    return guarded([&] {
        need(out, "out");
        pricemap::WaveSpec spec{base, b, n_digits, r_begin, r_end};
        *out = new padic_series{pricemap::wave_series(spec)};
    });
}

padic_status padic_pattern(const char* kind, double base, double b, int n_digits, int trend, int refine,
                           padic_series** out) {
    return guarded([&] {
        need(out, "out");
        need(kind, "kind");
        pricemap::WaveSpec spec{base, b, n_digits, 0, -1};
        *out = new padic_series{pricemap::pattern(pricemap::parse_pattern_kind(kind), spec, trend, refine)};
    });
}

padic_status padic_envelope(const double* g, size_t n, double base, double b, double scale, padic_series** out) {
    return guarded([&] {
        need(out, "out");
        if (n > 0) need(g, "g");
        pricemap::WaveSpec spec{base, b, 6, 0, -1};
        *out = new padic_series{pricemap::envelope_compose(std::span<const double>(g, n), spec, scale)};
    });
}

padic_status padic_random_signal(double base, double b, int n_digits, size_t length, uint64_t seed, padic_series** out) {
    return guarded([&] {
        need(out, "out");
        pricemap::WaveSpec spec{base, b, n_digits, 0, -1};
        *out = new padic_series{pricemap::random_signal(spec, length, seed)};
    });
}

size_t padic_series_length(const padic_series* s) { return s ? s->series.size() : 0; }

padic_status padic_series_get(const padic_series* s, size_t i, int64_t* r, double* value) {
    return guarded([&] {
        need(s, "series");
        if (i >= s->series.size()) fail(ErrorCode::Range, "series index out of range");
        if (r) *r = s->series.points[i].r;
        if (value) *value = s->series.points[i].value;
    });
}

padic_status padic_series_format(const padic_series* s, const char* format, const padic_meta* meta, const char* title,
                                 char** out) {
    return guarded([&] {
        need(s, "series");
        need(format, "format");
        need(out, "out");
        const auto m = meta_pairs(meta);
        const std::string fmt = format;
        if (fmt == "csv") {
            std::ostringstream os;
            write_meta(os, m);
            io::write_series_csv(os, s->series);
            *out = dup_string(os.str());
        } else if (fmt == "json") {
            json j;
            j["meta"] = meta_json(m);
            json r = json::array(), v = json::array();
            for (const auto& p : s->series.points) {
                r.push_back(p.r);
                v.push_back(p.value);
            }
            j["r"] = r;
            j["value"] = v;
            *out = dup_string(j.dump(2) + "\n");
        } else if (fmt == "svg") {
            io::Polyline line;
            for (const auto& p : s->series.points) {
                line.x.push_back(static_cast<double>(p.r));
                line.y.push_back(p.value);
            }
            *out = dup_string(svg_with_meta(io::svg_plot({line}, title ? title : ""), m));
        } else {
            fail(ErrorCode::InvalidArgument, "unknown format '" + fmt + "' (expected csv, json or svg)");
        }
    });
}

void padic_series_free(padic_series* s) { delete s; }

padic_status padic_delay_embed(const double* x, size_t n, int m, int stride, double* out, size_t cap, size_t* rows) {
    return guarded([&] {
        need(rows, "rows");
        if (n > 0) need(x, "x");
        auto vecs = pricemap::delay_embed(std::span<const double>(x, n), m, stride);
        *rows = vecs.size();
        const size_t total = vecs.size() * static_cast<size_t>(m);
        if (cap > 0) need(out, "out");
        for (size_t i = 0; i < vecs.size(); ++i)
            for (size_t j = 0; j < static_cast<size_t>(m); ++j) {
                size_t k = i * static_cast<size_t>(m) + j;
                if (k < cap && k < total) out[k] = vecs[i][j];
            }
    });
}

padic_status padic_x_operator(int r, int s, double out[16]) {
    return guarded([&] { mat_out(hubbard::x_operator(r, s), out); });
}

padic_status padic_creation_annihilation(int spin, int dagger, double out[16]) {
    return guarded([&] {
        if (spin != 0 && spin != 1) fail(ErrorCode::InvalidArgument, "spin must be 0 (up) or 1 (down)");
        mat_out(hubbard::creation_annihilation(spin == 0 ? hubbard::Spin::Up : hubbard::Spin::Down, dagger != 0), out);
    });
}

padic_status padic_gamma5(double out[16]) {
    return guarded([&] { mat_out(hubbard::gamma5(), out); });
}

padic_status padic_hamiltonian_spectrum(int sites, double W, double U, double mu, double* out, size_t cap, size_t* len) {
    return guarded([&] {
        need(len, "len");
        auto ev = hubbard::spectrum(hubbard::hamiltonian_dense(sites, W, U, mu));
        *len = static_cast<size_t>(ev.size());
        if (cap > 0) need(out, "out");
        for (Eigen::Index i = 0; i < ev.size() && static_cast<size_t>(i) < cap; ++i) out[i] = ev(i);
    });
}

padic_status padic_operators_report(char** out) {
    return guarded([&] {
        need(out, "out");
        using hubbard::Spin;
        const auto up_d = hubbard::creation_annihilation(Spin::Up, true);
        const auto dn_d = hubbard::creation_annihilation(Spin::Down, true);
        const auto up = hubbard::creation_annihilation(Spin::Up, false);
        const auto dn = hubbard::creation_annihilation(Spin::Down, false);
        json j;
        j["basis"] = json::array({"0", "+", "-", "2"});
        j["alpha_up_dagger"] = mat_json(up_d);
        j["alpha_down_dagger"] = mat_json(dn_d);
        j["alpha_up"] = mat_json(up);
        j["alpha_down"] = mat_json(dn);
        j["gamma5"] = mat_json(hubbard::gamma5());
        j["gamma5_identity_residual"] = hubbard::gamma5_identity_residual();
        auto anti = [](const hubbard::Mat4& a, const hubbard::Mat4& b) { return hubbard::Mat4(a * b + b * a); };
        const hubbard::Mat4 I = hubbard::Mat4::Identity();
        j["car_residual"] = std::max({(anti(up, up_d) - I).cwiseAbs().maxCoeff(), (anti(dn, dn_d) - I).cwiseAbs().maxCoeff(),
                                      anti(up, dn_d).cwiseAbs().maxCoeff(), anti(dn, up_d).cwiseAbs().maxCoeff(),
                                      anti(up, dn).cwiseAbs().maxCoeff(), anti(up, up).cwiseAbs().maxCoeff(),
                                      anti(dn, dn).cwiseAbs().maxCoeff()});
        auto cls = hubbard::classify_operators();
        json f = json::array(), b = json::array();
        for (const auto& op : cls.fermionic) f.push_back(op.label);
        for (const auto& op : cls.bosonic) b.push_back(op.label);
        j["fermionic"] = f;
        j["bosonic"] = b;
        j["gamma5_consistent"] = cls.gamma5_consistent;
        *out = dup_string(j.dump(2) + "\n");
    });
}

padic_status padic_scs_bracket(const double E[3], const double h[3], double ket[4], double bra[4], double* norm) {
    return guarded([&] {
        auto r = hubbard::scs_bracket(field(E), field(h));
        if (ket)
            for (int i = 0; i < 4; ++i) ket[i] = r.ket[static_cast<size_t>(i)];
        if (bra)
            for (int i = 0; i < 4; ++i) bra[i] = r.bra[static_cast<size_t>(i)];
        if (norm) *norm = r.norm;
    });
}

padic_status padic_scs_report(const double E[3], const double h[3], char** out) {
    return guarded([&] {
        need(out, "out");
        const auto e = field(E), hh = field(h);
        const auto ket = grassmann::scs_ket(e, hh);
        const auto br = hubbard::scs_bracket(e, hh);
        json j;
        j["E"] = json::array({e.z, e.plus, e.minus});
        j["h"] = json::array({hh.z, hh.plus, hh.minus});
        json k = json::array();
        for (const auto& c : ket) k.push_back(c.to_string());
        j["ket"] = k;
        j["bosonic_ket"] = br.ket;
        j["bosonic_bra"] = br.bra;
        j["norm"] = br.norm;
        j["structure_report"] = grassmann::ket_structure_report(e, hh);
        *out = dup_string(j.dump(2) + "\n");
    });
}

padic_status padic_op_symbols(const double E[6], const double h[6], double alpha, const double bilinears[6], char** out) {
    return guarded([&] {
        need(out, "out");
        hubbard::Bilinears bil;
        if (bilinears) bil = {{bilinears[0], bilinears[1]}, {bilinears[2], bilinears[3]}, {bilinears[4], bilinears[5]}};
        auto t = hubbard::op_symbols(cfield(E), cfield(h), alpha, bil);
        json j;
        j["E11"] = complex_json(t.E11);
        j["E12"] = complex_json(t.E12);
        j["E21"] = complex_json(t.E21);
        j["E22"] = complex_json(t.E22);
        j["f4"] = complex_json(t.f4);
        j["Sq_plus"] = complex_json(t.Sq_plus);
        j["Sq_minus"] = complex_json(t.Sq_minus);
        j["Sq_z"] = complex_json(t.Sq_z);
        j["S_plus"] = complex_json(t.S_plus);
        j["S_minus"] = complex_json(t.S_minus);
        j["S_z"] = complex_json(t.S_z);
        j["rho3"] = complex_json(t.rho3);
        j["rho_plus"] = complex_json(t.rho_plus);
        j["rho_minus"] = complex_json(t.rho_minus);
        j["alpha"] = alpha;
        *out = dup_string(j.dump(2) + "\n");
    });
}

void padic_market_config_default(padic_market_config* cfg) {
    if (!cfg) return;
    market::MarketConfig d;
    *cfg = {d.n_agents, d.W, d.U, d.mu, d.beta_temp, d.steps, d.seed, d.impact, d.price0,
            d.initial == market::InitialState::Random ? 1 : 0};
}

namespace {

market::MarketConfig to_cpp(const padic_market_config& c) {
    market::MarketConfig m;
    m.n_agents = c.n_agents;
    m.W = c.W;
    m.U = c.U;
    m.mu = c.mu;
    m.beta_temp = c.beta_temp;
    m.steps = c.steps;
    m.seed = c.seed;
    m.impact = c.impact;
    m.price0 = c.price0;
    m.initial = c.initial_random ? market::InitialState::Random : market::InitialState::Empty;
    return m;
}

}  // namespace

padic_status padic_market_config_set(padic_market_config* cfg, const char* key, const char* value) {
    return guarded([&] {
        need(cfg, "cfg");
        need(key, "key");
        need(value, "value");
        auto m = to_cpp(*cfg);
        market::apply_setting(m, key, value);
        *cfg = {m.n_agents, m.W, m.U, m.mu, m.beta_temp, m.steps, m.seed, m.impact, m.price0,
                m.initial == market::InitialState::Random ? 1 : 0};
    });
}

padic_status padic_simulate_market(const padic_market_config* cfg, padic_market_trace** out) {
    return guarded([&] {
        need(cfg, "cfg");
        need(out, "out");
        *out = new padic_market_trace{market::simulate_market(to_cpp(*cfg))};
    });
}

size_t padic_trace_length(const padic_market_trace* t) { return t ? t->trace.rows.size() : 0; }

padic_status padic_trace_row(const padic_market_trace* t, size_t i, long* step, int* n_buy, int* n_sell, int* n_hold,
                             double* price) {
    return guarded([&] {
        need(t, "trace");
        if (i >= t->trace.rows.size()) fail(ErrorCode::Range, "trace index out of range");
        const auto& r = t->trace.rows[i];
        if (step) *step = r.step;
        if (n_buy) *n_buy = r.n_buy;
        if (n_sell) *n_sell = r.n_sell;
        if (n_hold) *n_hold = r.n_hold;
        if (price) *price = r.price;
    });
}

padic_status padic_trace_csv(const padic_market_trace* t, const padic_meta* meta, char** out) {
    return guarded([&] {
        need(t, "trace");
        need(out, "out");
        std::ostringstream os;
        write_meta(os, meta_pairs(meta));
        market::write_csv(os, t->trace);
        *out = dup_string(os.str());
    });
}

void padic_trace_free(padic_market_trace* t) { delete t; }

void padic_fit_grid_default(padic_fit_grid* grid) {
    static const double bases[] = {2.0, 3.0, 5.0};
    if (!grid) return;
    fitting::FitGrid d;
    *grid = {bases, 3, d.b_min, d.b_max, d.b_step, d.t0_begin, d.t0_end};
}

padic_status padic_load_series(const char* path, const char* column, const char* time_column, padic_price_series** out) {
    return guarded([&] {
        need(path, "path");
        need(out, "out");
        *out = new padic_price_series{
            fitting::load_series(path, column ? column : "close", time_column ? time_column : "date")};
    });
}

size_t padic_price_series_length(const padic_price_series* s) { return s ? s->series.size() : 0; }

const double* padic_price_series_values(const padic_price_series* s) { return s ? s->series.prices.data() : nullptr; }

void padic_price_series_free(padic_price_series* s) { delete s; }

padic_status padic_load_ohlc(const char* path, double* out, size_t cap, size_t* rows) {
    return guarded([&] {
        need(path, "path");
        need(rows, "rows");
        auto bars = fitting::load_ohlc(path);
        *rows = bars.size();
        if (cap > 0) need(out, "out");
        for (size_t i = 0; i < bars.size(); ++i)
            for (size_t k = 0; k < 4; ++k)
                if (i * 4 + k < cap) out[i * 4 + k] = bars[i][k];
    });
}

padic_status padic_fit_padic(const double* y, size_t n, const padic_fit_grid* grid, int jobs, padic_fit** out) {
    return guarded([&] {
        need(out, "out");
        if (n > 0) need(y, "y");
        fitting::FitGrid g;
        if (grid) {
            if (grid->n_bases > 0) need(grid->bases, "grid->bases");
            g.bases.assign(grid->bases, grid->bases + grid->n_bases);
            g.b_min = grid->b_min;
            g.b_max = grid->b_max;
            g.b_step = grid->b_step;
            g.t0_begin = grid->t0_begin;
            g.t0_end = grid->t0_end;
        }
        auto res = fitting::fit_padic(std::span<const double>(y, n), g, jobs);
        auto values = res.fitted.values();
        *out = new padic_fit{std::move(res), std::move(values)};
    });
}

padic_status padic_fit_params(const padic_fit* fit, double* base, double* b, int64_t* t0, double* A, double* C,
                              double* rmse) {
    return guarded([&] {
        need(fit, "fit");
        const auto& r = fit->result;
        if (base) *base = r.base;
        if (b) *b = r.b_frac;
        if (t0) *t0 = r.t0;
        if (A) *A = r.A;
        if (C) *C = r.C;
        if (rmse) *rmse = r.rmse;
    });
}

size_t padic_fit_length(const padic_fit* fit) { return fit ? fit->values.size() : 0; }

const double* padic_fit_values(const padic_fit* fit) { return fit ? fit->values.data() : nullptr; }

padic_status padic_fit_json(const padic_fit* fit, const padic_meta* meta, char** out) {
    return guarded([&] {
        need(fit, "fit");
        need(out, "out");
        const auto& r = fit->result;
        json j;
        j["meta"] = meta_json(meta_pairs(meta));
        j["base"] = r.base;
        j["b"] = r.b_frac;
        j["t0"] = r.t0;
        j["A"] = r.A;
        j["C"] = r.C;
        j["rmse"] = r.rmse;
        j["evaluated"] = r.evaluated;
        j["skipped"] = r.skipped;
        j["diagnostics"] = r.diagnostics;
        j["fitted"] = fit->values;
        *out = dup_string(j.dump(2) + "\n");
    });
}

void padic_fit_free(padic_fit* fit) { delete fit; }

padic_status padic_rmse(const double* a, const double* b, size_t n, double* out) {
    return guarded([&] {
        need(out, "out");
        if (n > 0) {
            need(a, "a");
            need(b, "b");
        }
        *out = fitting::rmse(std::span<const double>(a, n), std::span<const double>(b, n));
    });
}

padic_status padic_svg_plot(const double* y1, size_t n1, const double* y2, size_t n2, const char* title, char** out) {
    return guarded([&] {
        need(out, "out");
        if (n1 > 0) need(y1, "y1");
        std::vector<io::Polyline> lines(1);
        for (size_t i = 0; i < n1; ++i) {
            lines[0].x.push_back(static_cast<double>(i));
            lines[0].y.push_back(y1[i]);
        }
        if (y2 && n2 > 0) {
            io::Polyline second;
            second.colour = "#c0392b";
            for (size_t i = 0; i < n2; ++i) {
                second.x.push_back(static_cast<double>(i));
                second.y.push_back(y2[i]);
            }
            lines.push_back(std::move(second));
        }
        *out = dup_string(io::svg_plot(lines, title ? title : ""));
    });
}

}  // extern "C"
