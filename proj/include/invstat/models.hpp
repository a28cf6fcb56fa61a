#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace invstat {

// Two-state correlated market model. Regular state: independent lognormal
// steps with drift mu_r. Distressed state: one common lognormal step with
// drift mu_d < 0 across all stocks. Rates are annualized, dt in years.
struct ModelParams {
    int n_stocks = 30;
    double dt = 1.0 / 250.0;
    double xi = 0.3;
    double mu_r = 0.0;
    double mu_d = -0.15;
    double p_rd = 1.0 / 200.0; // per-day P(regular -> distressed)
    double p_dr = 1.0 / 25.0;  // per-day P(distressed -> regular)
    double s0 = 100.0;

    void validate() const; // throws std::invalid_argument
};

enum class Regime : std::uint8_t { regular = 0, distressed = 1 };

// (pi_r, pi_d) of the two-state chain: pi_d = p_rd / (p_rd + p_dr).
std::pair<double, double> stationary_distribution(double p_rd, double p_dr);

// Closed-form drift making the stationary per-step expected simple index
// return equal target: the expected simple return of a lognormal step with
// drift mu is e^{mu dt} - 1, independent of xi.
double calibrate_mu_r(const ModelParams& params, double target_mean_return);

Regime step_regime(Regime state, double p_rd, double p_dr, double u);

// One day of price updates. Regular regime consumes n_stocks draws in z,
// distressed exactly one; any other count is an error.
void step_prices(std::span<const double> prices, Regime regime, const ModelParams& params,
                 std::span<const double> z, std::span<double> out);

struct MarketPath {
    std::vector<std::vector<double>> stocks; // n_stocks x (T+1)
    std::vector<double> index;               // length T+1, mean of stocks
    std::vector<Regime> regimes;             // length T, regime in force on each day
    std::uint64_t seed = 0;
};

// Index and regimes only; identical to MarketPath::index for the same seed.
struct IndexPath {
    std::vector<double> index;
    std::vector<Regime> regimes;
    std::uint64_t seed = 0;
};

// Deterministic in (params, t_steps, seed). The regime transition is drawn at
// the start of each day (one uniform), then the day's normal draws follow.
MarketPath simulate(const ModelParams& params, std::int64_t t_steps, std::uint64_t seed);
IndexPath simulate_index(const ModelParams& params, std::int64_t t_steps, std::uint64_t seed);

// Sample std (n-1 denominator) of one-step log changes of the path.
double daily_sigma(std::span<const double> index_path);

// Simulation configuration file: JSON object or flat key = value lines with
// keys n_stocks, dt, xi, mu_r (number or "calibrate"), mu_d, p_rd, p_dr, s0,
// target_mean_return, seed, t_steps.
struct SimConfig {
    ModelParams params;
    bool calibrate = true; // mu_r = "calibrate"
    double target_mean_return = 2.58e-4;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> t_steps;
};

SimConfig load_sim_config(const std::string& path);
SimConfig parse_sim_config(const std::string& text);

// Resolves mu_r (calibrating if requested) and validates.
ModelParams resolve_params(const SimConfig& cfg);

std::string path_to_csv(const MarketPath& path, bool with_stocks);
std::string path_to_csv(const IndexPath& path);

} // namespace invstat
