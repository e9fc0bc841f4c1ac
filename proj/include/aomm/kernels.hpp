#pragma once

// Batch evaluation of the probe response over detuning grids.
//
// The closed-form response and its detuning derivative are evaluated for
// arrays of lambda values. The arithmetic is embarrassingly data-parallel, so
// the hot loop exists in two equivalence-tested variants: a scalar reference
// kernel and an AVX2 kernel selected at runtime on x86-64. Everything
// downstream (observables, sweep tables, delay surfaces) consumes the same
// four output arrays regardless of lane width.

#include <complex>
#include <cstddef>
#include <string>

#include "aomm/config.hpp"

namespace aomm::kernels {

// Immutable per-config constants consumed by the kernels.
// sigma = +1 for the standard convention, -1 for the mirrored one.
struct ResponseParams {
    double kappa_a = 0.0;
    double kappa_c = 0.0;
    double kappa_m = 0.0;
    double kappa_b = 0.0;
    double ga2 = 0.0;
    double gc2 = 0.0;
    double gm2 = 0.0;
    double sigma = 1.0;
};

ResponseParams response_params(const SystemConfig& config);

// Continued-fraction denominator of the cavity response,
//   D(l) = (kappa_c - i l) + ga^2/(kappa_a - i l) + gc^2 / B(l),
//   B(l) = (kappa_b - i l) + gm^2/(kappa_m - i l),
// evaluated at l = sigma * lambda. Valid only for zero detuning offsets.
std::complex<double> denominator(const ResponseParams& p, double lambda);

struct PointResponse {
    std::complex<double> eps_out;  // 2 kappa_c / D
    std::complex<double> deps_out; // d eps_out / d delta
};

// Scalar reference evaluation of one grid point; the batch kernels must agree
// with this to near machine precision.
PointResponse eval_point(const ResponseParams& p, double lambda);

// Kernel contract: fill eps_out and its delta-derivative (split re/im) for n
// detunings. Output arrays must each hold n doubles.
using ResponseKernelFn = void (*)(const ResponseParams& p, const double* lambda,
                                  std::size_t n, double* eps_re, double* eps_im,
                                  double* deps_re, double* deps_im);

enum class KernelKind { scalar, avx2 };

const char* kernel_name(KernelKind kind);
bool kernel_available(KernelKind kind);

// Active kernel: best available lane unless overridden.
KernelKind active_kernel();

// Testing/benchmark hook. Requesting an unavailable kernel throws
// std::invalid_argument. Passing nullopt-like `reset_kernel()` restores
// automatic selection.
void force_kernel(KernelKind kind);
void reset_kernel();

ResponseKernelFn kernel_fn(KernelKind kind);

// Evaluates with the active kernel.
void eval_response_batch(const ResponseParams& p, const double* lambda,
                         std::size_t n, double* eps_re, double* eps_im,
                         double* deps_re, double* deps_im);

} // namespace aomm::kernels
