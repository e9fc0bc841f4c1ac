#include "aomm/kernels.hpp"

namespace aomm::kernels {

// Reference lane: one grid point at a time through the shared scalar
// evaluator. Keeps a single source of truth for the formulas the SIMD lanes
// are tested against.
void eval_response_scalar(const ResponseParams& p, const double* lambda,
                          std::size_t n, double* eps_re, double* eps_im,
                          double* deps_re, double* deps_im) {
    for (std::size_t i = 0; i < n; ++i) {
        const PointResponse r = eval_point(p, lambda[i]);
        eps_re[i] = r.eps_out.real();
        eps_im[i] = r.eps_out.imag();
        deps_re[i] = r.deps_out.real();
        deps_im[i] = r.deps_out.imag();
    }
}

} // namespace aomm::kernels
