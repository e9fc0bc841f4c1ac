#include <immintrin.h>

#include "aomm/kernels.hpp"

// AVX2 lane: four detunings per iteration, complex values split re/im.
// Compiled with -mavx2 -mfma; only reached after a cpuid check.

namespace aomm::kernels {

bool cpu_supports_avx2() { return __builtin_cpu_supports("avx2"); }

namespace {

struct Cvec {
    __m256d re;
    __m256d im;
};

inline Cvec cmul(Cvec a, Cvec b) {
    return {_mm256_fmsub_pd(a.re, b.re, _mm256_mul_pd(a.im, b.im)),
            _mm256_fmadd_pd(a.re, b.im, _mm256_mul_pd(a.im, b.re))};
}

// r / z for real r: r * conj(z) / |z|^2
inline Cvec rdiv(__m256d r, Cvec z) {
    const __m256d norm = _mm256_fmadd_pd(z.re, z.re, _mm256_mul_pd(z.im, z.im));
    const __m256d s = _mm256_div_pd(r, norm);
    return {_mm256_mul_pd(s, z.re),
            _mm256_mul_pd(_mm256_sub_pd(_mm256_setzero_pd(), s), z.im)};
}

inline Cvec cdiv(Cvec a, Cvec b) {
    const __m256d norm = _mm256_fmadd_pd(b.re, b.re, _mm256_mul_pd(b.im, b.im));
    const Cvec num = cmul(a, {b.re, _mm256_sub_pd(_mm256_setzero_pd(), b.im)});
    return {_mm256_div_pd(num.re, norm), _mm256_div_pd(num.im, norm)};
}

inline Cvec cadd(Cvec a, Cvec b) {
    return {_mm256_add_pd(a.re, b.re), _mm256_add_pd(a.im, b.im)};
}

} // namespace

void eval_response_avx2(const ResponseParams& p, const double* lambda,
                        std::size_t n, double* eps_re, double* eps_im,
                        double* deps_re, double* deps_im) {
    const __m256d sigma = _mm256_set1_pd(p.sigma);
    const __m256d ka = _mm256_set1_pd(p.kappa_a);
    const __m256d kc = _mm256_set1_pd(p.kappa_c);
    const __m256d km = _mm256_set1_pd(p.kappa_m);
    const __m256d kb = _mm256_set1_pd(p.kappa_b);
    const __m256d ga2 = _mm256_set1_pd(p.ga2);
    const __m256d gc2 = _mm256_set1_pd(p.gc2);
    const __m256d gm2 = _mm256_set1_pd(p.gm2);
    const __m256d two_kc = _mm256_set1_pd(2.0 * p.kappa_c);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d lt = _mm256_mul_pd(sigma, _mm256_loadu_pd(lambda + i));
        const __m256d neg_lt = _mm256_sub_pd(zero, lt);

        const Cvec d_a{ka, neg_lt};
        const Cvec d_m{km, neg_lt};
        const Cvec ta = rdiv(ga2, d_a);
        const Cvec tm = rdiv(gm2, d_m);
        const Cvec b = cadd(Cvec{kb, neg_lt}, tm);
        const Cvec tc = rdiv(gc2, b);
        const Cvec d = cadd(cadd(Cvec{kc, neg_lt}, ta), tc);

        const Cvec eps = rdiv(two_kc, d);

        // z = gm2/d_m^2, y = ga2/d_a^2 reuse the first-order quotients.
        const Cvec z = cdiv(tm, d_m);
        const Cvec y = cdiv(ta, d_a);
        // B' = i(z - 1), so B' = (-z_im, z_re - 1).
        const Cvec bp{_mm256_sub_pd(zero, z.im), _mm256_sub_pd(z.re, one)};
        const Cvec b2 = cmul(b, b);
        const Cvec w = cdiv(bp, b2);
        // D' = i(y - 1) - gc2 * w
        const Cvec dp{
            _mm256_fnmadd_pd(gc2, w.re, _mm256_sub_pd(zero, y.im)),
            _mm256_fnmadd_pd(gc2, w.im, _mm256_sub_pd(y.re, one))};

        const Cvec q = cdiv(cmul(eps, dp), d);
        const __m256d neg_sigma = _mm256_sub_pd(zero, sigma);

        _mm256_storeu_pd(eps_re + i, eps.re);
        _mm256_storeu_pd(eps_im + i, eps.im);
        _mm256_storeu_pd(deps_re + i, _mm256_mul_pd(neg_sigma, q.re));
        _mm256_storeu_pd(deps_im + i, _mm256_mul_pd(neg_sigma, q.im));
    }

    for (; i < n; ++i) {
        const PointResponse r = eval_point(p, lambda[i]);
        eps_re[i] = r.eps_out.real();
        eps_im[i] = r.eps_out.imag();
        deps_re[i] = r.deps_out.real();
        deps_im[i] = r.deps_out.imag();
    }
}

} // namespace aomm::kernels
