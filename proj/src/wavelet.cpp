#include "invstat/wavelet.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "invstat/kernels.hpp"

namespace invstat {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488016887242097;
constexpr double kFilterTol = 1e-12;

// Daubechies least-asymmetric scaling filter of length 8, standard tabulation.
constexpr double kLa8[8] = {
    -0.07576571478927333, -0.02963552764599851, 0.49761866763201545,
    0.80373875180591614,  0.29785779560527736,  -0.09921954357684722,
    -0.01260396726203783, 0.03222310060404270,
};

void check_filter(const WaveletFilter& f) {
    const auto& h = f.h;
    const auto& g = f.g;
    const std::size_t L = h.size();
    double sum_h = 0.0, sum_h2 = 0.0, sum_g = 0.0;
    for (std::size_t l = 0; l < L; ++l) {
        sum_h += h[l];
        sum_h2 += h[l] * h[l];
        sum_g += g[l];
    }
    if (std::abs(sum_h - kSqrt2) > kFilterTol || std::abs(sum_h2 - 1.0) > kFilterTol ||
        std::abs(sum_g) > kFilterTol) {
        throw std::logic_error("filter " + f.name + " violates normalization");
    }
    for (std::size_t k = 1; 2 * k < L; ++k) {
        double dot = 0.0;
        for (std::size_t l = 0; l + 2 * k < L; ++l) dot += h[l] * h[l + 2 * k];
        if (std::abs(dot) > kFilterTol) {
            throw std::logic_error("filter " + f.name + " violates even-shift orthogonality");
        }
    }
}

std::string format_double(double v) {
    char buf[40];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

} // namespace

FilterKind parse_filter_kind(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "haar") return FilterKind::haar;
    if (s == "d4") return FilterKind::d4;
    if (s == "la8" || s == "la(8)") return FilterKind::la8;
    throw std::invalid_argument("unknown wavelet filter '" + name + "'");
}

std::string filter_name(FilterKind kind) {
    switch (kind) {
        case FilterKind::haar: return "haar";
        case FilterKind::d4: return "d4";
        case FilterKind::la8: return "la8";
    }
    return "?";
}

WaveletFilter make_filter(FilterKind kind) {
    WaveletFilter f;
    f.name = filter_name(kind);
    switch (kind) {
        case FilterKind::haar:
            f.h = {1.0 / kSqrt2, 1.0 / kSqrt2};
            break;
        case FilterKind::d4: {
            const double s3 = std::sqrt(3.0);
            const double c = 4.0 * kSqrt2;
            f.h = {(1.0 + s3) / c, (3.0 + s3) / c, (3.0 - s3) / c, (1.0 - s3) / c};
            break;
        }
        case FilterKind::la8:
            f.h.assign(kLa8, kLa8 + 8);
            break;
    }
    const std::size_t L = f.h.size();
    f.g.resize(L);
    for (std::size_t l = 0; l < L; ++l) {
        f.g[l] = (l % 2 == 0 ? 1.0 : -1.0) * f.h[L - 1 - l];
    }
    check_filter(f);
    return f;
}

Boundary parse_boundary(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "reflection" || s == "reflect") return Boundary::reflection;
    if (s == "periodic") return Boundary::periodic;
    throw std::invalid_argument("unknown boundary rule '" + name + "'");
}

std::string boundary_name(Boundary b) {
    return b == Boundary::reflection ? "reflection" : "periodic";
}

int max_level(std::size_t n) {
    int j = 0;
    while ((std::size_t{1} << (j + 1)) <= n) ++j;
    return j;
}

namespace {

void check_transform_args(std::size_t n, int level) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    if (n < 2) throw std::invalid_argument("series too short for a wavelet transform");
    if (level > max_level(n)) {
        throw std::invalid_argument("level " + std::to_string(level) +
                                    " infeasible for series of length " + std::to_string(n) +
                                    " (max " + std::to_string(max_level(n)) + ")");
    }
}

bool dominated_by_boundary(std::size_t n, std::size_t filter_len, int level) {
    const double width = static_cast<double>(filter_len - 1) *
                         (std::pow(2.0, level) - 1.0);
    return width >= static_cast<double>(n);
}

std::vector<double> reflect(std::span<const double> x) {
    std::vector<double> e(x.begin(), x.end());
    e.insert(e.end(), x.rbegin(), x.rend());
    return e;
}

// Pyramid on a periodic series. Rescaled taps h/sqrt(2), g/sqrt(2); level j
// filters the previous scaling coefficients with stride 2^(j-1).
struct Pyramid {
    std::vector<std::vector<double>> w;
    std::vector<double> v;
};

Pyramid forward(std::span<const double> x, const WaveletFilter& f, int level) {
    const std::size_t n = x.size();
    std::vector<double> ht(f.h), gt(f.g);
    for (auto& c : ht) c /= kSqrt2;
    for (auto& c : gt) c /= kSqrt2;

    Pyramid p;
    p.v.assign(x.begin(), x.end());
    std::vector<double> next(n);
    for (int j = 1; j <= level; ++j) {
        const std::int64_t stride = std::int64_t{1} << (j - 1);
        std::vector<double> wj(n);
        kernels::circ_filter(p.v, gt, stride, false, wj);
        kernels::circ_filter(p.v, ht, stride, false, next);
        p.w.push_back(std::move(wj));
        p.v.swap(next);
    }
    return p;
}

// Inverse cascade applied to a single coefficient band: the adjoint wavelet
// step at its own level, then adjoint scaling steps down to level 1.
std::vector<double> invert_band(const std::vector<double>& band, bool is_detail, int level,
                                const WaveletFilter& f) {
    const std::size_t n = band.size();
    std::vector<double> ht(f.h), gt(f.g);
    for (auto& c : ht) c /= kSqrt2;
    for (auto& c : gt) c /= kSqrt2;

    std::vector<double> cur(band), next(n);
    kernels::circ_filter(cur, is_detail ? gt : ht, std::int64_t{1} << (level - 1), true, next);
    cur.swap(next);
    for (int j = level - 1; j >= 1; --j) {
        kernels::circ_filter(cur, ht, std::int64_t{1} << (j - 1), true, next);
        cur.swap(next);
    }
    return cur;
}

} // namespace

ModwtCoeffs modwt(std::span<const double> x, const WaveletFilter& f, int level,
                  Boundary boundary) {
    check_transform_args(x.size(), level);
    ModwtCoeffs c;
    c.level = level;
    c.filter = f.name;
    c.boundary = boundary;
    c.boundary_dominated = dominated_by_boundary(x.size(), f.length(), level);

    if (boundary == Boundary::periodic) {
        Pyramid p = forward(x, f, level);
        c.w = std::move(p.w);
        c.v = std::move(p.v);
        return c;
    }
    const std::vector<double> ext = reflect(x);
    Pyramid p = forward(ext, f, level);
    for (auto& wj : p.w) wj.resize(x.size());
    p.v.resize(x.size());
    c.w = std::move(p.w);
    c.v = std::move(p.v);
    return c;
}

MraDecomposition mra(std::span<const double> x, const WaveletFilter& f, int level,
                     Boundary boundary) {
    check_transform_args(x.size(), level);
    MraDecomposition m;
    m.level = level;
    m.filter = f.name;
    m.boundary = boundary;
    m.boundary_dominated = dominated_by_boundary(x.size(), f.length(), level);

    const bool reflected = boundary == Boundary::reflection;
    const std::vector<double> ext = reflected ? reflect(x) : std::vector<double>();
    const std::span<const double> grid = reflected ? std::span<const double>(ext) : x;

    Pyramid p = forward(grid, f, level);
    m.details.reserve(level);
    for (int j = 1; j <= level; ++j) {
        std::vector<double> dj = invert_band(p.w[j - 1], true, j, f);
        if (reflected) dj.resize(x.size());
        m.details.push_back(std::move(dj));
    }
    std::vector<double> s = invert_band(p.v, false, level, f);
    if (reflected) s.resize(x.size());
    m.smooth = std::move(s);
    return m;
}

std::vector<double> highpass_residual(std::span<const double> x, const WaveletFilter& f,
                                      int level, Boundary boundary) {
    MraDecomposition m = mra(x, f, level, boundary);
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - m.smooth[i];
    return r;
}

std::vector<double> bandpass_signal(std::span<const double> x, const WaveletFilter& f,
                                    int j_lo, int j_hi, Boundary boundary) {
    if (j_lo < 1 || j_lo > j_hi) throw std::invalid_argument("invalid level range");
    MraDecomposition m = mra(x, f, j_hi, boundary);
    std::vector<double> out(x.size(), 0.0);
    for (int j = j_lo; j <= j_hi; ++j) {
        for (std::size_t i = 0; i < x.size(); ++i) out[i] += m.details[j - 1][i];
    }
    return out;
}

std::string mra_to_csv(const MraDecomposition& m, std::span<const double> x) {
    std::string out;
    for (int j = 1; j <= m.level; ++j) out += "D" + std::to_string(j) + ",";
    out += "S" + std::to_string(m.level) + ",R" + std::to_string(m.level) + "\n";
    for (std::size_t i = 0; i < m.smooth.size(); ++i) {
        for (int j = 1; j <= m.level; ++j) {
            out += format_double(m.details[j - 1][i]);
            out += ',';
        }
        out += format_double(m.smooth[i]);
        out += ',';
        out += format_double(x[i] - m.smooth[i]);
        out += '\n';
    }
    return out;
}

std::string mra_to_json(const MraDecomposition& m, std::span<const double> x) {
    nlohmann::json j;
    j["filter"] = m.filter;
    j["boundary"] = boundary_name(m.boundary);
    j["level"] = m.level;
    j["boundary_dominated"] = m.boundary_dominated;
    for (int d = 1; d <= m.level; ++d) {
        j["D" + std::to_string(d)] = m.details[d - 1];
    }
    j["SJ"] = m.smooth;
    std::vector<double> r(m.smooth.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = x[i] - m.smooth[i];
    j["RJ"] = r;
    return j.dump();
}

} // namespace invstat
