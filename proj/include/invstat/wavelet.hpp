#pragma once

#include <span>
#include <string>
#include <vector>

namespace invstat {

enum class FilterKind { haar, d4, la8 };

FilterKind parse_filter_kind(const std::string& name); // throws std::invalid_argument
std::string filter_name(FilterKind kind);

// Orthonormal scaling/wavelet pair. g is derived from h by the quadrature
// mirror relation g[l] = (-1)^l h[L-1-l]. Construction checks sum(h)=sqrt(2),
// sum(h^2)=1, even-shift orthogonality and sum(g)=0 to 1e-12 and throws if the
// tabulated coefficients ever fail them.
struct WaveletFilter {
    std::string name;
    std::vector<double> h; // scaling (low-pass)
    std::vector<double> g; // wavelet (high-pass)

    std::size_t length() const { return h.size(); }
};

WaveletFilter make_filter(FilterKind kind);

// Reflection extends the series by its time-reverse before a periodic
// transform and truncates the outputs, so the end of the sample never wraps
// onto its beginning. Periodic is required for the energy-preservation and
// shift-covariance properties.
enum class Boundary { reflection, periodic };

Boundary parse_boundary(const std::string& name);
std::string boundary_name(Boundary b);

// Undecimated transform coefficients; every W_j and V_J has the input length.
struct ModwtCoeffs {
    std::vector<std::vector<double>> w; // W_1..W_J
    std::vector<double> v;              // V_J
    int level = 0;
    std::string filter;
    Boundary boundary = Boundary::reflection;
    bool boundary_dominated = false; // (L-1)(2^J - 1) >= N
};

ModwtCoeffs modwt(std::span<const double> x, const WaveletFilter& f, int level,
                  Boundary boundary = Boundary::reflection);

// Additive decomposition x = sum_j D_j + S_J. D_j captures changes on scales
// between 2^(j-1) and 2^j observation steps, S_J everything slower.
struct MraDecomposition {
    std::vector<std::vector<double>> details; // D_1..D_J
    std::vector<double> smooth;               // S_J
    int level = 0;
    std::string filter;
    Boundary boundary = Boundary::reflection;
    bool boundary_dominated = false;
};

MraDecomposition mra(std::span<const double> x, const WaveletFilter& f, int level,
                     Boundary boundary = Boundary::reflection);

// R_J = x - S_J, the detrended series keeping scales up to 2^J steps.
std::vector<double> highpass_residual(std::span<const double> x, const WaveletFilter& f,
                                      int level, Boundary boundary = Boundary::reflection);

// sum of D_j for j in [j_lo, j_hi], from an MRA at level j_hi.
std::vector<double> bandpass_signal(std::span<const double> x, const WaveletFilter& f,
                                    int j_lo, int j_hi,
                                    Boundary boundary = Boundary::reflection);

int max_level(std::size_t n); // floor(log2(n)); higher levels are a hard error

std::string mra_to_csv(const MraDecomposition& m, std::span<const double> x);
std::string mra_to_json(const MraDecomposition& m, std::span<const double> x);

} // namespace invstat
