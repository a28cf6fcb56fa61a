#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Hot inner loops, each in an OpenMP-parallel and a serial reference version.
// The parallel versions write disjoint output elements, so results are
// bit-identical to the serial ones; tests assert exact agreement and
// bench/bench_kernels.cpp compares their throughput.
namespace invstat::kernels {

// Circular filtering step of the undecimated (maximal-overlap) transform:
//   analysis: out[t] = sum_l taps[l] * in[(t - stride*l) mod N]
//   adjoint:  out[t] = sum_l taps[l] * in[(t + stride*l) mod N]
void circ_filter_serial(std::span<const double> in, std::span<const double> taps,
                        std::int64_t stride, bool adjoint, std::span<double> out);
void circ_filter(std::span<const double> in, std::span<const double> taps,
                 std::int64_t stride, bool adjoint, std::span<double> out);

// First-passage scan. waits[n] = smallest m >= 1 with
//   x[n+m] - x[n] >= rho   (rho > 0)
//   x[n+m] - x[n] <= rho   (rho < 0)
// or 0 if no such m exists before the series ends. waits has length N-1.
// The serial version is the plain forward scan; the parallel version skips
// ahead through a block max/min table and is exact, not approximate.
void fpt_scan_serial(std::span<const double> x, double rho, std::span<std::int64_t> waits);
void fpt_scan(std::span<const double> x, double rho, std::span<std::int64_t> waits);

} // namespace invstat::kernels
