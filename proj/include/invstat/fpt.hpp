#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace invstat {

// Signed crossing level in the additive units of the series: rho > 0 is a
// gain target, rho < 0 a loss target.
struct PassageLevel {
    double rho;
    explicit PassageLevel(double r);
};

// Wait-time observations in trading-day steps. waits is sorted ascending
// (samples are a multiset; order of the parallel scan must not show).
struct WaitTimeSamples {
    std::vector<std::int64_t> waits;
    std::int64_t n_starts = 0;
    std::int64_t n_censored = 0;
};

// Per-start waits over starts 0..N-2; 0 marks a censored start. This is the
// raw form of fpt_samples, kept public for per-start comparisons.
std::vector<std::int64_t> fpt_wait_per_start(std::span<const double> x, PassageLevel level);

WaitTimeSamples fpt_samples(std::span<const double> x, PassageLevel level);

struct Binning {
    enum class Mode { raw, log_binned };
    Mode mode = Mode::log_binned;
    int bins_per_decade = 10;

    static Binning raw() { return {Mode::raw, 0}; }
    static Binning log(int bpd = 10) { return {Mode::log_binned, bpd}; }
};

// Centered moving average over the support grid before taking the mode;
// window 1 means none. Defaults: 3 bins for log-binned, none for raw.
struct Smoothing {
    int window = 1;
    static Smoothing default_for(const Binning& b) {
        return {b.mode == Binning::Mode::log_binned ? 3 : 1};
    }
};

// Empirical pmf of the wait time. Raw mode: mass at each observed integer
// wait. Log-binned mode: mass per geometric bin (count-normalized, not a
// density); support holds geometric bin midpoints, empty interior bins keep
// probability zero.
struct FptDistribution {
    std::vector<double> support;
    std::vector<double> probability;
    double rho = 0.0;
    Binning binning;
    std::int64_t n_starts = 0;
    std::int64_t n_censored = 0;
    std::int64_t n_samples = 0;
    std::string label;
};

FptDistribution empirical_distribution(const WaitTimeSamples& s, const Binning& binning,
                                       double rho, const std::string& label = "");

// Support point maximizing the (optionally smoothed) probability; ties break
// toward the smaller wait.
double mode_wait_time(const FptDistribution& d, const Smoothing& smoothing);

struct AsymmetryStat {
    double mode_gain = 0.0;  // days
    double mode_loss = 0.0;  // days
    double delta = 0.0;      // mode_gain - mode_loss; positive = losses reached faster
    double log_ratio = 0.0;  // ln(mode_gain / mode_loss)
    double rho_abs = 0.0;
    std::int64_t n_gain = 0;
    std::int64_t n_loss = 0;
    std::int64_t censored_gain = 0;
    std::int64_t censored_loss = 0;
    Binning binning;
    Smoothing smoothing;
};

AsymmetryStat asymmetry(std::span<const double> x, double rho_abs,
                        const Binning& binning, const Smoothing& smoothing);
AsymmetryStat asymmetry(std::span<const double> x, double rho_abs,
                        const Binning& binning = Binning());

std::string distribution_to_csv(const FptDistribution& d);
std::string distribution_to_json(const FptDistribution& d, const Smoothing& smoothing);

} // namespace invstat
