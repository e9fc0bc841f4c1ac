#pragma once

// Steady-state probe response at a single detuning.
//
// Two routes produce the cavity sideband amplitude c_plus:
//   * the dense 4x4 linear solve of the stationary sideband system
//     (authoritative), and
//   * the closed-form continued fraction (valid at zero detuning offsets).
// probe_response() runs the solve and, when the closed form applies, asserts
// the two agree to 1e-10 relative.

#include <complex>

#include "aomm/config.hpp"
#include "aomm/kernels.hpp"
#include "aomm/linalg4.hpp"

namespace aomm {

// Unknown ordering throughout: (a_plus, c_plus, m_plus, b_plus).
struct SidebandAmplitudes {
    cplx a_plus;
    cplx c_plus;
    cplx m_plus;
    cplx b_plus;
};

struct SidebandSystem {
    Mat4c matrix;
    Vec4c rhs;
};

struct TransmissionResult {
    cplx t_p;
    double transmission; // |t_p|^2
    double phase;        // Arg t_p in (-pi, pi]
};

struct ProbeResponse {
    double lambda; // delta - omega_b, rad/s
    cplx eps_out;
    cplx t_p;
    double absorption;   // Re eps_out
    double dispersion;   // Im eps_out
    double transmission; // |t_p|^2
    double phase;        // Arg t_p
};

enum class DelayMode { eq8, phase_tp };

// Stationary system M x = v at probe offset lambda. Under the standard
// convention the diagonal is (kappa_o - i lambda_o) with
// lambda_o = lambda_eff - offset_o and v = (0, eps_p, 0, 0); under the paper
// convention the mirrored system is returned in the printed orientation
// (i lambda_o - kappa_o diagonal, v = (0, -eps_p, 0, 0)). Both conventions
// coincide at lambda = 0.
SidebandSystem sideband_matrix(const SystemConfig& config, double lambda);

// Exact solve with partial pivoting; residual is checked against
// 1e-12 * |rhs|. Throws SingularSystemError / NumericalError.
SidebandAmplitudes solve_sidebands(const SystemConfig& config, double lambda);

// Continued-fraction form of c_plus. Requires zero detuning offsets.
cplx c_plus_closed_form(const SystemConfig& config, double lambda);

// eps_out = 2 kappa_c c_plus / eps_p
cplx epsilon_out(const SystemConfig& config, cplx c_plus);

// t_p = 1 - eps_out
TransmissionResult transmission(cplx eps_out);

// Group delay at probe detuning delta (rad/s).
//   eq8:      Im[(1/eps_out) d eps_out/d delta]
//   phase_tp: d Arg(t_p) / d delta
// Analytic derivative: chain rule on the continued fraction at zero offsets,
// matrix-derivative route otherwise. Throws NumericalError when the response
// magnitude is below 1e-30 (delay undefined there).
double group_delay(const SystemConfig& config, double delta, DelayMode mode);

ProbeResponse probe_response(const SystemConfig& config, double delta);

// Derived per-point observables used by bulk sweeps. Delay entries are NaN
// where the corresponding response magnitude is below the 1e-30 floor.
struct PointObservables {
    double absorption;
    double dispersion;
    double transmission;
    double phase;
    double tau_eq8;
    double tau_phase;
};

PointObservables observables_from(cplx eps_out, cplx deps_out);

// d eps_out / d delta via the linear-solve route (valid for any offsets):
// differentiating M x = v gives x' = M^{-1} (i sigma_M x).
cplx epsilon_out_derivative_solve(const SystemConfig& config, double lambda);

} // namespace aomm
