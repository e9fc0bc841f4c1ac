#include "aomm/response.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "aomm/errors.hpp"

namespace aomm {

namespace {

constexpr double kResponseFloor = 1e-30;

bool offsets_are_zero(const SystemConfig& c) {
    return c.detuning_offsets.a == 0.0 && c.detuning_offsets.c == 0.0 &&
           c.detuning_offsets.m == 0.0;
}

std::string format_rad_s(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace

SidebandSystem sideband_matrix(const SystemConfig& config, double lambda) {
    if (!std::isfinite(lambda))
        throw std::invalid_argument("lambda must be finite");

    const bool standard = config.sign_convention == SignConvention::standard;
    const double lam_eff = standard ? lambda : -lambda;
    const double la = lam_eff - config.detuning_offsets.a;
    const double lc = lam_eff - config.detuning_offsets.c;
    const double lm = lam_eff - config.detuning_offsets.m;
    const double lb = lam_eff;

    const cplx i{0.0, 1.0};
    const Couplings& g = config.couplings;

    // All-positive-damping orientation: rows (a, c, m, b).
    SidebandSystem sys;
    Mat4c& M = sys.matrix;
    M(0, 0) = cplx{config.rates.kappa_a, -la};
    M(0, 1) = i * g.g_a;
    M(1, 0) = i * g.g_a;
    M(1, 1) = cplx{config.rates.kappa_c, -lc};
    M(1, 3) = -i * g.g_c;
    M(2, 2) = cplx{config.rates.kappa_m, -lm};
    M(2, 3) = i * g.g_m;
    M(3, 1) = -i * g.g_c;
    M(3, 2) = i * g.g_m;
    M(3, 3) = cplx{config.rates.kappa_b, -lb};
    sys.rhs[1] = config.probe_amplitude;

    if (!standard) {
        // Printed orientation: every row negated, so the diagonal reads
        // (i lambda_o - kappa_o) and the drive enters with a minus.
        sys.matrix = cplx{-1.0, 0.0} * sys.matrix;
        sys.rhs = cplx{-1.0, 0.0} * sys.rhs;
    }
    return sys;
}

SidebandAmplitudes solve_sidebands(const SystemConfig& config, double lambda) {
    const SidebandSystem sys = sideband_matrix(config, lambda);
    const Vec4c x = solve4(sys.matrix, sys.rhs);
    const double res = residual_norm(sys.matrix, x, sys.rhs);
    const double rhs_norm = sys.rhs.max_abs();
    if (res > 1e-12 * rhs_norm)
        throw NumericalError("sideband solve residual " + format_rad_s(res) +
                             " exceeds 1e-12 * |rhs| at lambda = " +
                             format_rad_s(lambda));
    return {x[0], x[1], x[2], x[3]};
}

cplx c_plus_closed_form(const SystemConfig& config, double lambda) {
    if (!offsets_are_zero(config))
        throw std::invalid_argument(
            "closed form requires zero detuning offsets; use solve_sidebands");
    const auto p = kernels::response_params(config);
    return config.probe_amplitude / kernels::denominator(p, lambda);
}

cplx epsilon_out(const SystemConfig& config, cplx c_plus) {
    if (config.probe_amplitude == 0.0)
        throw std::invalid_argument(
            "eps_out is undefined for zero probe amplitude");
    return 2.0 * config.rates.kappa_c * c_plus / config.probe_amplitude;
}

TransmissionResult transmission(cplx eps_out) {
    TransmissionResult r;
    r.t_p = 1.0 - eps_out;
    r.transmission = std::norm(r.t_p);
    r.phase = std::atan2(r.t_p.imag(), r.t_p.real());
    if (r.phase == -two_pi / 2.0) r.phase = two_pi / 2.0; // (-pi, pi]
    return r;
}

cplx epsilon_out_derivative_solve(const SystemConfig& config, double lambda) {
    const SidebandSystem sys = sideband_matrix(config, lambda);
    const Vec4c x = solve4(sys.matrix, sys.rhs);
    // Only the diagonal depends on delta and dM/d delta = -i I in both
    // returned orientations, so differentiating M x = v gives M x' = i x.
    Vec4c rhs2 = cplx{0.0, 1.0} * x;
    const Vec4c xp = solve4(sys.matrix, rhs2);
    return epsilon_out(config, xp[1]);
}

PointObservables observables_from(cplx eps_out, cplx deps_out) {
    PointObservables o;
    o.absorption = eps_out.real();
    o.dispersion = eps_out.imag();
    const TransmissionResult t = transmission(eps_out);
    o.transmission = t.transmission;
    o.phase = t.phase;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    o.tau_eq8 = std::abs(eps_out) < kResponseFloor
                    ? nan
                    : std::imag(deps_out / eps_out);
    o.tau_phase = std::abs(t.t_p) < kResponseFloor
                      ? nan
                      : std::imag(-deps_out / t.t_p);
    return o;
}

double group_delay(const SystemConfig& config, double delta, DelayMode mode) {
    const double lambda = delta - config.omega_b;
    cplx eps, deps;
    if (offsets_are_zero(config)) {
        const auto p = kernels::response_params(config);
        const auto point = kernels::eval_point(p, lambda);
        eps = point.eps_out;
        deps = point.deps_out;
    } else {
        const SidebandAmplitudes amps = solve_sidebands(config, lambda);
        eps = epsilon_out(config, amps.c_plus);
        deps = epsilon_out_derivative_solve(config, lambda);
    }
    if (mode == DelayMode::eq8) {
        if (std::abs(eps) < kResponseFloor)
            throw NumericalError("group delay undefined: |eps_out| < 1e-30");
        return std::imag(deps / eps);
    }
    const cplx t_p = 1.0 - eps;
    if (std::abs(t_p) < kResponseFloor)
        throw NumericalError("group delay undefined: |t_p| < 1e-30");
    return std::imag(-deps / t_p);
}

ProbeResponse probe_response(const SystemConfig& config, double delta) {
    const double lambda = delta - config.omega_b;
    const SidebandAmplitudes amps = solve_sidebands(config, lambda);

    if (offsets_are_zero(config)) {
        const cplx cf = c_plus_closed_form(config, lambda);
        const double scale = std::abs(amps.c_plus);
        if (scale > 0.0 && std::abs(cf - amps.c_plus) > 1e-10 * scale)
            throw NumericalError(
                "closed form disagrees with linear solve at lambda = " +
                format_rad_s(lambda));
    }

    ProbeResponse r;
    r.lambda = lambda;
    r.eps_out = epsilon_out(config, amps.c_plus);
    const TransmissionResult t = transmission(r.eps_out);
    r.t_p = t.t_p;
    r.absorption = r.eps_out.real();
    r.dispersion = r.eps_out.imag();
    r.transmission = t.transmission;
    r.phase = t.phase;
    return r;
}

} // namespace aomm
