#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "invstat/fpt.hpp"
#include "invstat/models.hpp"
#include "invstat/series.hpp"
#include "invstat/wavelet.hpp"

namespace invstat {

struct RhoSpec {
    enum class Kind { absolute, sigma_multiple };
    Kind kind = Kind::sigma_multiple;
    double value = 5.0;
};

struct FileSource {
    std::string path;
    CsvSchema schema;
    bool raw_values = false; // value column already a log/filtered series
};

struct ModelSource {
    ModelParams params;
    bool calibrate = true;
    double target_mean_return = 2.58e-4;
    std::int64_t t_steps = 0;
};

struct ExperimentSpec {
    std::variant<FileSource, ModelSource> source;
    std::vector<int> levels = {6, 8, 10};
    FilterKind filter = FilterKind::la8;
    Boundary boundary = Boundary::reflection;
    RhoSpec rho;
    Binning binning;
    Smoothing smoothing = Smoothing::default_for(Binning());
    std::optional<std::uint64_t> seed;
    std::string label;

    void validate() const;
};

// Result for one filtration level; level 0 is the unfiltered series. A
// direction with no crossings is reported through its error string without
// aborting the other levels. stat is absent when either direction is empty,
// and flagged unreliable when either direction has fewer than 100 samples.
struct LevelEntry {
    int level = 0;
    std::optional<FptDistribution> gain;
    std::optional<FptDistribution> loss;
    std::optional<AsymmetryStat> stat;
    std::string gain_error;
    std::string loss_error;
    bool reliable = true;
    bool boundary_dominated = false;
};

struct MultiscaleReport {
    std::string label;
    std::string filter;
    std::string boundary;
    double rho_abs = 0.0;
    double sigma = 0.0; // daily sigma of the unfiltered series
    std::string rho_desc;
    Binning binning;
    Smoothing smoothing;
    std::optional<std::uint64_t> seed;
    std::optional<double> mu_r_used;
    std::vector<LevelEntry> entries; // entry 0 = unfiltered, then one per level
};

// Resolves the source to a log series (load+log or simulate+log-index),
// fixes rho from the unfiltered series, and runs gain/loss FPT for the
// unfiltered series and every requested R_J.
MultiscaleReport run_multiscale_fpt(const ExperimentSpec& spec);

// AsymmetryStat per level of J_range plus the unfiltered baseline at level 0.
std::vector<std::pair<int, AsymmetryStat>> asymmetry_emergence_curve(
    std::span<const double> x, const WaveletFilter& f, Boundary boundary,
    std::span<const int> j_range, double rho_abs, const Binning& binning,
    const Smoothing& smoothing);

enum class ReportFormat { csv, json, svg };

std::string render_report(const MultiscaleReport& report, ReportFormat format);

ExperimentSpec load_experiment_spec(const std::string& path);
ExperimentSpec parse_experiment_spec(const std::string& text);

// Canonical 64-bit hash of the spec, stable across runs.
std::string spec_hash(const ExperimentSpec& spec);

// Writes report.csv/.json/.svg plus manifest.json (artifact list + spec hash)
// into out_dir; returns the artifact paths. Refuses to overwrite without force.
std::vector<std::string> write_experiment_artifacts(const MultiscaleReport& report,
                                                    const ExperimentSpec& spec,
                                                    const std::string& out_dir, bool force);

} // namespace invstat
