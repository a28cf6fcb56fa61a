#include "invstat/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <vector>

namespace invstat::kernels {

namespace {

inline double tap_sum(const double* in, const double* taps, const std::int64_t* off,
                      std::size_t ntaps, std::int64_t t, std::int64_t n, bool adjoint) {
    double acc = 0.0;
    if (adjoint) {
        for (std::size_t l = 0; l < ntaps; ++l) {
            std::int64_t idx = t + off[l];
            if (idx >= n) idx -= n;
            acc += taps[l] * in[idx];
        }
    } else {
        for (std::size_t l = 0; l < ntaps; ++l) {
            std::int64_t idx = t - off[l];
            if (idx < 0) idx += n;
            acc += taps[l] * in[idx];
        }
    }
    return acc;
}

} // namespace

void circ_filter_serial(std::span<const double> in, std::span<const double> taps,
                        std::int64_t stride, bool adjoint, std::span<double> out) {
    const std::int64_t n = static_cast<std::int64_t>(in.size());
    assert(out.size() == in.size());
    std::int64_t off[64];
    for (std::size_t l = 0; l < taps.size(); ++l) {
        off[l] = (stride * static_cast<std::int64_t>(l)) % n;
    }
    for (std::int64_t t = 0; t < n; ++t) {
        out[t] = tap_sum(in.data(), taps.data(), off, taps.size(), t, n, adjoint);
    }
}

void circ_filter(std::span<const double> in, std::span<const double> taps,
                 std::int64_t stride, bool adjoint, std::span<double> out) {
    const std::int64_t n = static_cast<std::int64_t>(in.size());
    assert(out.size() == in.size());
    std::int64_t off[64];
    for (std::size_t l = 0; l < taps.size(); ++l) {
        off[l] = (stride * static_cast<std::int64_t>(l)) % n;
    }
    const double* ip = in.data();
    const double* tp = taps.data();
    double* op = out.data();
    const std::size_t ntaps = taps.size();
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 0; t < n; ++t) {
        op[t] = tap_sum(ip, tp, off, ntaps, t, n, adjoint);
    }
}

void fpt_scan_serial(std::span<const double> x, double rho, std::span<std::int64_t> waits) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    assert(waits.size() + 1 == x.size());
    if (rho > 0) {
        for (std::int64_t s = 0; s < n - 1; ++s) {
            const double target = x[s] + rho;
            waits[s] = 0;
            for (std::int64_t m = s + 1; m < n; ++m) {
                if (x[m] >= target) {
                    waits[s] = m - s;
                    break;
                }
            }
        }
    } else {
        for (std::int64_t s = 0; s < n - 1; ++s) {
            const double target = x[s] + rho;
            waits[s] = 0;
            for (std::int64_t m = s + 1; m < n; ++m) {
                if (x[m] <= target) {
                    waits[s] = m - s;
                    break;
                }
            }
        }
    }
}

namespace {

constexpr std::int64_t kBlock = 64;

// Sparse table over block maxima (gains) or minima (losses): table[l] holds
// the extremum of 2^l consecutive blocks. Finding the first position crossing
// a target is then O(block + log) per start instead of a full forward scan,
// with results identical to the plain scan.
struct SkipTable {
    std::vector<std::vector<double>> levels;
    std::int64_t nblocks = 0;

    template <class Better>
    void build(std::span<const double> x, Better better, double worst) {
        const std::int64_t n = static_cast<std::int64_t>(x.size());
        nblocks = (n + kBlock - 1) / kBlock;
        levels.clear();
        levels.emplace_back(nblocks, worst);
        auto& base = levels[0];
        for (std::int64_t b = 0; b < nblocks; ++b) {
            const std::int64_t hi = std::min(n, (b + 1) * kBlock);
            double e = x[b * kBlock];
            for (std::int64_t i = b * kBlock + 1; i < hi; ++i) {
                if (better(x[i], e)) e = x[i];
            }
            base[b] = e;
        }
        for (std::int64_t len = 2; len <= nblocks; len *= 2) {
            const auto& prev = levels.back();
            std::vector<double> cur(nblocks, worst);
            const std::int64_t half = len / 2;
            for (std::int64_t b = 0; b + len <= nblocks; ++b) {
                cur[b] = better(prev[b], prev[b + half]) ? prev[b] : prev[b + half];
            }
            levels.push_back(std::move(cur));
        }
    }

    // First block >= b0 whose extremum reaches the target, or nblocks.
    template <class Reaches>
    std::int64_t first_reaching(std::int64_t b0, Reaches reaches) const {
        std::int64_t cur = b0;
        if (cur >= nblocks) return nblocks;
        for (std::int64_t l = static_cast<std::int64_t>(levels.size()) - 1; l >= 0; --l) {
            const std::int64_t len = std::int64_t{1} << l;
            while (cur + len <= nblocks && !reaches(levels[l][cur])) cur += len;
        }
        return cur;
    }
};

template <class Cmp>
void fpt_scan_impl(std::span<const double> x, double rho, std::span<std::int64_t> waits,
                   Cmp cmp, double worst) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    SkipTable table;
    table.build(x, [&](double a, double b) { return cmp(b, a); }, worst);

    const double* xp = x.data();
    std::int64_t* wp = waits.data();
#pragma omp parallel for schedule(dynamic, 512)
    for (std::int64_t s = 0; s < n - 1; ++s) {
        const double target = xp[s] + rho;
        auto reaches = [&](double v) { return !cmp(v, target); }; // v >= target (gain)
        std::int64_t hit = -1;
        const std::int64_t bend = std::min(n, (s / kBlock + 1) * kBlock);
        for (std::int64_t m = s + 1; m < bend; ++m) {
            if (reaches(xp[m])) {
                hit = m;
                break;
            }
        }
        if (hit < 0) {
            const std::int64_t b = table.first_reaching(s / kBlock + 1, reaches);
            if (b < table.nblocks) {
                const std::int64_t hi = std::min(n, (b + 1) * kBlock);
                for (std::int64_t m = b * kBlock; m < hi; ++m) {
                    if (reaches(xp[m])) {
                        hit = m;
                        break;
                    }
                }
            }
        }
        wp[s] = hit < 0 ? 0 : hit - s;
    }
}

} // namespace

void fpt_scan(std::span<const double> x, double rho, std::span<std::int64_t> waits) {
    assert(waits.size() + 1 == x.size());
    if (rho > 0) {
        // reaches: v >= target, extremum = max
        fpt_scan_impl(x, rho, waits, [](double a, double b) { return a < b; },
                      -std::numeric_limits<double>::infinity());
    } else {
        // reaches: v <= target, extremum = min
        fpt_scan_impl(x, rho, waits, [](double a, double b) { return a > b; },
                      std::numeric_limits<double>::infinity());
    }
}

} // namespace invstat::kernels
