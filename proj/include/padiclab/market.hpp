// SPDX-License-Identifier: MIT
//
// Metropolis market of agents in the four site states (empty, buy, sell,
// hold) with on-site energy U [hold] - mu n and paired trades at weight W.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace padiclab::market {

enum class InitialState { Empty, Random };

struct MarketConfig {
    int n_agents = 64;
    double W = 1.0;          // trade weight: a proposal is a trade with probability W / (1 + W)
    double U = 1.0;          // cost of the hold state
    double mu = 0.5;         // chemical potential per particle
    double beta_temp = 1.0;  // inverse temperature; +inf accepts only strict descents
    long steps = 1000;       // sweeps; one sweep is n_agents proposals
    std::uint64_t seed = 1;
    double impact = 1.0;     // log-price change per unit of (N_buy - N_sell) / n_agents
    double price0 = 1.0;
    InitialState initial = InitialState::Empty;

    void validate() const;
};

/// Applies key/value pairs (n_agents, W, U, mu, beta_temp, steps, seed,
/// impact, price0, initial). Unknown keys raise InvalidArgument.
void apply_setting(MarketConfig& cfg, const std::string& key, const std::string& value);

/// Reads a key=value file (# comments allowed) or, if the first non-blank
/// character is '{', a JSON object.
MarketConfig load_config(const std::string& path);

struct MarketRow {
    long step = 0;
    int n_empty = 0;
    int n_buy = 0;
    int n_sell = 0;
    int n_hold = 0;
    double price = 0.0;
};

struct MarketTrace {
    MarketConfig config;
    std::vector<MarketRow> rows;  // step 0 is the initial state
    long accepted = 0;
    long proposed = 0;
};

/// Energy of a single agent state.
double site_energy(int state, double U, double mu);

MarketTrace simulate_market(const MarketConfig& cfg);

/// CSV with columns step,n_buy,n_sell,n_hold,price after '#' metadata lines.
void write_csv(std::ostream& os, const MarketTrace& trace, const std::map<std::string, std::string>& meta = {});

}  // namespace padiclab::market
