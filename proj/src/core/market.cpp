// SPDX-License-Identifier: MIT
#include "padiclab/market.hpp"

#include <cmath>
#include <ostream>

#include "padiclab/error.hpp"
#include "padiclab/io.hpp"
#include "padiclab/rng.hpp"

namespace padiclab::market {

namespace {

// Site states follow the Hubbard basis: 0 empty, 1 buy (+), 2 sell (-), 3 hold (2).
constexpr int kEmpty = 0, kBuy = 1, kSell = 2, kHold = 3;

bool occupied(int state, int spin) { return state == kHold || state == spin; }

int add_particle(int state, int spin) { return state == kEmpty ? spin : kHold; }

int remove_particle(int state, int spin) { return state == kHold ? (spin == kBuy ? kSell : kBuy) : kEmpty; }

double parse_number(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        fail(ErrorCode::InvalidArgument, "config: '" + key + "' expects a number, got '" + value + "'");
    }
    if (used != value.size()) fail(ErrorCode::InvalidArgument, "config: '" + key + "' expects a number, got '" + value + "'");
    return v;
}

long parse_integer(const std::string& key, const std::string& value) {
    double v = parse_number(key, value);
    if (v != std::floor(v) || std::abs(v) > 9.0e15)
        fail(ErrorCode::InvalidArgument, "config: '" + key + "' expects an integer, got '" + value + "'");
    return static_cast<long>(v);
}

}  // namespace

void MarketConfig::validate() const {
    require(n_agents >= 2, "market: n_agents must be at least 2");
    require(steps >= 0, "market: steps must be nonnegative");
    require(std::isfinite(W) && W >= 0.0, "market: W must be finite and nonnegative");
    require(!std::isnan(beta_temp) && beta_temp >= 0.0, "market: beta_temp must be nonnegative");
    require(std::isfinite(U) && std::isfinite(mu), "market: U and mu must be finite");
    require(std::isfinite(impact), "market: impact must be finite");
    require(std::isfinite(price0) && price0 > 0.0, "market: price0 must be positive");
}

void apply_setting(MarketConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "n_agents") cfg.n_agents = static_cast<int>(parse_integer(key, value));
    else if (key == "W") cfg.W = parse_number(key, value);
    else if (key == "U") cfg.U = parse_number(key, value);
    else if (key == "mu") cfg.mu = parse_number(key, value);
    else if (key == "beta_temp" || key == "beta") cfg.beta_temp = parse_number(key, value);
    else if (key == "steps") cfg.steps = parse_integer(key, value);
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_integer(key, value));
    else if (key == "impact") cfg.impact = parse_number(key, value);
    else if (key == "price0") cfg.price0 = parse_number(key, value);
    else if (key == "initial") {
        if (value == "empty") cfg.initial = InitialState::Empty;
        else if (value == "random") cfg.initial = InitialState::Random;
        else fail(ErrorCode::InvalidArgument, "config: initial must be 'empty' or 'random'");
    } else {
        fail(ErrorCode::InvalidArgument, "config: unknown market key '" + key + "'");
    }
}

MarketConfig load_config(const std::string& path) {
    MarketConfig cfg;
    for (const auto& [k, v] : io::read_settings(path)) apply_setting(cfg, k, v);
    cfg.validate();
    return cfg;
}

double site_energy(int state, double U, double mu) {
    const int n = state == kEmpty ? 0 : (state == kHold ? 2 : 1);
    return (state == kHold ? U : 0.0) - mu * n;
}

MarketTrace simulate_market(const MarketConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const int n = cfg.n_agents;
    std::vector<int> state(static_cast<std::size_t>(n), kEmpty);
    if (cfg.initial == InitialState::Random)
        for (auto& s : state) s = static_cast<int>(rng.below(4));

    const double p_trade = cfg.W / (1.0 + cfg.W);
    const bool zero_temperature = std::isinf(cfg.beta_temp);
    auto accept = [&](double dE) {
        if (zero_temperature) return dE < 0.0;
        if (dE <= 0.0) return true;
        return rng.uniform() < std::exp(-cfg.beta_temp * dE);
    };

    MarketTrace trace;
    trace.config = cfg;
    trace.rows.reserve(static_cast<std::size_t>(cfg.steps) + 1);
    double log_price = std::log(cfg.price0);
    auto record = [&](long step) {
        MarketRow row;
        row.step = step;
        for (int s : state) {
            switch (s) {
                case kEmpty: ++row.n_empty; break;
                case kBuy: ++row.n_buy; break;
                case kSell: ++row.n_sell; break;
                default: ++row.n_hold; break;
            }
        }
        row.price = std::exp(log_price);
        trace.rows.push_back(row);
        return row;
    };
    record(0);

    for (long step = 1; step <= cfg.steps; ++step) {
        for (int k = 0; k < n; ++k) {
            ++trace.proposed;
            if (rng.uniform() < p_trade) {
                // i hands one particle of a random spin to j
                auto i = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)));
                auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n - 1)));
                if (j >= i) ++j;
                const int spin = rng.below(2) == 0 ? kBuy : kSell;
                if (!occupied(state[i], spin) || occupied(state[j], spin)) continue;
                const int si = remove_particle(state[i], spin), sj = add_particle(state[j], spin);
                const double dE = site_energy(si, cfg.U, cfg.mu) + site_energy(sj, cfg.U, cfg.mu) -
                                  site_energy(state[i], cfg.U, cfg.mu) - site_energy(state[j], cfg.U, cfg.mu);
                if (accept(dE)) {
                    state[i] = si;
                    state[j] = sj;
                    ++trace.accepted;
                }
            } else {
                auto i = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)));
                int target = static_cast<int>(rng.below(3));
                if (target >= state[i]) ++target;
                const double dE = site_energy(target, cfg.U, cfg.mu) - site_energy(state[i], cfg.U, cfg.mu);
                if (accept(dE)) {
                    state[i] = target;
                    ++trace.accepted;
                }
            }
        }
        int n_buy = 0, n_sell = 0;
        for (int s : state) {
            n_buy += s == kBuy;
            n_sell += s == kSell;
        }
        log_price += cfg.impact * static_cast<double>(n_buy - n_sell) / n;
        record(step);
    }
    return trace;
}

void write_csv(std::ostream& os, const MarketTrace& trace, const std::map<std::string, std::string>& meta) {
    io::write_metadata(os, meta);
    os << "step,n_buy,n_sell,n_hold,price\n";
    for (const auto& r : trace.rows)
        os << r.step << ',' << r.n_buy << ',' << r.n_sell << ',' << r.n_hold << ',' << io::format_double(r.price) << '\n';
}

}  // namespace padiclab::market
