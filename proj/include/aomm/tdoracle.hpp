#pragma once

// Independent time-domain verification of the frequency-domain solver.
//
// The linearized, noise-free mean-value dynamics x' = A x + v e^{i lambda t}
// are integrated with fixed-step RK4 and the trailing steady oscillation is
// demodulated at lambda. The demodulated amplitude solves
// (i lambda I - A) x = v, which equals the stationary sideband system in its
// mirrored orientation, so the oracle cross-checks solve_sidebands through an
// entirely different numerical route.

#include <vector>

#include "aomm/config.hpp"
#include "aomm/linalg4.hpp"
#include "aomm/response.hpp"

namespace aomm::oracle {

struct IntegrationSpec {
    double dt = 0.0;           // seconds
    double t_end = 0.0;        // seconds
    double demod_window = 0.0; // trailing demodulation window, seconds
    Vec4c initial_state{};
};

// Spec satisfying the resolution and convergence bounds:
//   dt <= 1/(50 * max(|lambda|, rates, couplings))
//   demod_window >= 20 periods (or 20/kappa_min at lambda = 0)
//   t_end >= 10/kappa_min + demod_window
IntegrationSpec default_integration_spec(const SystemConfig& config,
                                         double lambda);

// Damped drift matrix: diagonal -(kappa_o + i offset_o), off-diagonal
// couplings as in the stationary system. Its numerical range lies in
// Re <= -min(kappa), so every eigenvalue has strictly negative real part.
Mat4c drift_matrix(const SystemConfig& config);

// Probe drive vector (eps_p in the cavity slot).
Vec4c drive_vector(const SystemConfig& config);

struct Trajectory {
    double dt = 0.0;
    std::vector<Vec4c> states; // states[k] at t = k * dt
    double t_end() const { return dt * static_cast<double>(states.size() - 1); }
};

// Classical fixed-step RK4. Throws InstabilityError when the state norm
// exceeds 1e6 * |v| / kappa_min.
Trajectory integrate(const SystemConfig& config, double lambda,
                     const IntegrationSpec& spec);

// (1/T) integral of x(t) e^{-i lambda t} over the trailing window
// (trapezoidal rule). Throws std::invalid_argument if the window exceeds the
// series length.
Vec4c demodulate(const Trajectory& traj, double lambda, double window);

struct OracleResult {
    double lambda = 0.0;
    Vec4c demodulated;
    // Relative change between the demodulated amplitudes of the last two
    // windows; below tolerance means the transient has died out.
    double transient_estimate = 0.0;
    // Max relative deviation from the convention-mapped linear solve.
    double max_rel_error = 0.0;
    bool converged = false;
};

// Integrates at each lambda and compares against solve_sidebands under the
// mirrored (paper) orientation, which is the one the damped dynamics realize.
std::vector<OracleResult> cross_check(const SystemConfig& config,
                                      const std::vector<double>& lambdas,
                                      double tolerance = 1e-3);

std::vector<OracleResult> cross_check(const SystemConfig& config,
                                      const std::vector<double>& lambdas,
                                      const IntegrationSpec& spec,
                                      double tolerance = 1e-3);

// Copy of the config with kappa_b raised to 2pi * 1e5 Hz. The full-stiffness
// mechanical linewidth makes a single transient decay cost ~1e8 steps; the
// cross-check is a structural identity valid at any damping, so the default
// verification runs desk-scale.
SystemConfig desk_scale_config(SystemConfig config);

} // namespace aomm::oracle
