#include "aomm/kernels.hpp"

#include <stdexcept>

namespace aomm::kernels {

void eval_response_scalar(const ResponseParams& p, const double* lambda,
                          std::size_t n, double* eps_re, double* eps_im,
                          double* deps_re, double* deps_im);

#ifdef AOMM_HAVE_AVX2_TU
void eval_response_avx2(const ResponseParams& p, const double* lambda,
                        std::size_t n, double* eps_re, double* eps_im,
                        double* deps_re, double* deps_im);
bool cpu_supports_avx2();
#endif

ResponseParams response_params(const SystemConfig& config) {
    ResponseParams p;
    p.kappa_a = config.rates.kappa_a;
    p.kappa_c = config.rates.kappa_c;
    p.kappa_m = config.rates.kappa_m;
    p.kappa_b = config.rates.kappa_b;
    p.ga2 = config.couplings.g_a * config.couplings.g_a;
    p.gc2 = config.couplings.g_c * config.couplings.g_c;
    p.gm2 = config.couplings.g_m * config.couplings.g_m;
    p.sigma = config.sign_convention == SignConvention::standard ? 1.0 : -1.0;
    return p;
}

std::complex<double> denominator(const ResponseParams& p, double lambda) {
    using cd = std::complex<double>;
    const double lt = p.sigma * lambda;
    const cd d_a{p.kappa_a, -lt};
    const cd d_m{p.kappa_m, -lt};
    const cd b = cd{p.kappa_b, -lt} + p.gm2 / d_m;
    return cd{p.kappa_c, -lt} + p.ga2 / d_a + p.gc2 / b;
}

PointResponse eval_point(const ResponseParams& p, double lambda) {
    using cd = std::complex<double>;
    const cd i{0.0, 1.0};
    const double lt = p.sigma * lambda;
    const cd d_a{p.kappa_a, -lt};
    const cd d_m{p.kappa_m, -lt};
    const cd b = cd{p.kappa_b, -lt} + p.gm2 / d_m;
    const cd d = cd{p.kappa_c, -lt} + p.ga2 / d_a + p.gc2 / b;
    // dB/dl = -i + i gm^2/d_m^2, dD/dl = -i + i ga^2/d_a^2 - gc^2 B'/B^2,
    // then the chain rule maps d/dl to sigma * d/d delta.
    const cd bp = -i + i * (p.gm2 / (d_m * d_m));
    const cd dp = -i + i * (p.ga2 / (d_a * d_a)) - p.gc2 * bp / (b * b);
    PointResponse out;
    out.eps_out = 2.0 * p.kappa_c / d;
    out.deps_out = -(out.eps_out * dp / d) * p.sigma;
    return out;
}

namespace {

KernelKind detect_best() {
#ifdef AOMM_HAVE_AVX2_TU
    if (cpu_supports_avx2()) return KernelKind::avx2;
#endif
    return KernelKind::scalar;
}

KernelKind& selected() {
    static KernelKind kind = detect_best();
    return kind;
}

} // namespace

const char* kernel_name(KernelKind kind) {
    switch (kind) {
        case KernelKind::scalar: return "scalar";
        case KernelKind::avx2: return "avx2";
    }
    return "unknown";
}

bool kernel_available(KernelKind kind) {
    switch (kind) {
        case KernelKind::scalar:
            return true;
        case KernelKind::avx2:
#ifdef AOMM_HAVE_AVX2_TU
            return cpu_supports_avx2();
#else
            return false;
#endif
    }
    return false;
}

KernelKind active_kernel() { return selected(); }

void force_kernel(KernelKind kind) {
    if (!kernel_available(kind))
        throw std::invalid_argument(std::string("kernel not available on this host: ") +
                                    kernel_name(kind));
    selected() = kind;
}

void reset_kernel() { selected() = detect_best(); }

ResponseKernelFn kernel_fn(KernelKind kind) {
    switch (kind) {
        case KernelKind::scalar:
            return &eval_response_scalar;
        case KernelKind::avx2:
#ifdef AOMM_HAVE_AVX2_TU
            return &eval_response_avx2;
#else
            break;
#endif
    }
    throw std::invalid_argument("kernel not compiled into this build");
}

void eval_response_batch(const ResponseParams& p, const double* lambda,
                         std::size_t n, double* eps_re, double* eps_im,
                         double* deps_re, double* deps_im) {
    kernel_fn(selected())(p, lambda, n, eps_re, eps_im, deps_re, deps_im);
}

} // namespace aomm::kernels
