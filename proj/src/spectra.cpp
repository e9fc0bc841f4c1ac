#include "aomm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "aomm/errors.hpp"
#include "aomm/kernels.hpp"

namespace aomm {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n == 0) return {};
    if (n == 1) return {lo};
    std::vector<double> out(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = lo + static_cast<double>(k) * step;
    out.back() = hi;
    return out;
}

namespace {

void check_grid(const SweepGrid& grid) {
    if (grid.delta_values.empty())
        throw std::invalid_argument("sweep grid is empty");
    for (std::size_t i = 0; i < grid.delta_values.size(); ++i) {
        if (!std::isfinite(grid.delta_values[i]))
            throw std::invalid_argument("sweep grid contains a non-finite delta");
        if (i > 0 && grid.delta_values[i] <= grid.delta_values[i - 1])
            throw std::invalid_argument("sweep grid must be strictly increasing");
    }
}

void check_config(const SystemConfig& config) {
    const auto diags = validate(config);
    if (has_errors(diags)) {
        std::string msg = "invalid config:";
        for (const auto& d : diags)
            if (d.severity == Diagnostic::Severity::error) msg += " " + d.message + ";";
        throw ConfigError(msg);
    }
}

// Lambda offsets built symmetrically around the center so that +-lambda pairs
// are exact floating-point negations of each other.
std::vector<double> symmetric_lambdas(double omega_b, double lo_frac,
                                      double hi_frac, std::size_t n) {
    const double center = 0.5 * (lo_frac + hi_frac) * omega_b;
    const double step = (n > 1) ? (hi_frac - lo_frac) * omega_b /
                                      static_cast<double>(n - 1)
                                : 0.0;
    const double mid = 0.5 * static_cast<double>(n - 1);
    std::vector<double> lam(n);
    for (std::size_t k = 0; k < n; ++k)
        lam[k] = (center - omega_b) + (static_cast<double>(k) - mid) * step;
    return lam;
}

} // namespace

SweepGrid make_uniform_grid(double omega_b, double lo_frac, double hi_frac,
                            std::size_t n_points) {
    if (n_points < 2 || !(hi_frac > lo_frac))
        throw std::invalid_argument("uniform grid needs hi > lo and >= 2 points");
    SweepGrid grid;
    grid.refinement = Refinement::uniform;
    grid.lo_frac = lo_frac;
    grid.hi_frac = hi_frac;
    grid.n_uniform = n_points;
    const auto lam = symmetric_lambdas(omega_b, lo_frac, hi_frac, n_points);
    grid.delta_values.reserve(n_points);
    for (double l : lam) grid.delta_values.push_back(omega_b + l);
    return grid;
}

SweepGrid make_center_refined_grid(double omega_b, double kappa_b,
                                   double lo_frac, double hi_frac,
                                   std::size_t n_uniform, double span_factor,
                                   double spacing_divisor, double ratio) {
    if (!(ratio > 1.0) || !(spacing_divisor > 0.0) || !(span_factor > 0.0))
        throw std::invalid_argument("invalid center refinement parameters");
    SweepGrid grid;
    grid.refinement = Refinement::center_refined;
    grid.lo_frac = lo_frac;
    grid.hi_frac = hi_frac;
    grid.n_uniform = n_uniform;
    grid.span_factor = span_factor;
    grid.spacing_divisor = spacing_divisor;
    grid.ratio = ratio;

    std::set<double> lambdas;
    for (double l : symmetric_lambdas(omega_b, lo_frac, hi_frac, n_uniform))
        lambdas.insert(l);
    lambdas.insert(0.0);
    const double span = span_factor * kappa_b;
    for (double x = kappa_b / spacing_divisor; x <= span; x *= ratio) {
        lambdas.insert(x);
        lambdas.insert(-x);
    }
    grid.delta_values.reserve(lambdas.size());
    for (double l : lambdas) grid.delta_values.push_back(omega_b + l);
    return grid;
}

SweepGrid default_grid(const SystemConfig& config) {
    return make_center_refined_grid(config.omega_b, config.rates.kappa_b, 0.5,
                                    1.5, 2001);
}

SweepGrid densify(const SweepGrid& grid, const SystemConfig& config) {
    if (grid.refinement == Refinement::uniform)
        return make_uniform_grid(config.omega_b, grid.lo_frac, grid.hi_frac,
                                 2 * grid.n_uniform - 1);
    return make_center_refined_grid(config.omega_b, config.rates.kappa_b,
                                    grid.lo_frac, grid.hi_frac,
                                    2 * grid.n_uniform - 1, grid.span_factor,
                                    grid.spacing_divisor, std::sqrt(grid.ratio));
}

SpectrumTable sweep_spectrum(const SystemConfig& config, const SweepGrid& grid) {
    check_config(config);
    check_grid(grid);

    const std::size_t n = grid.delta_values.size();
    std::vector<double> lambdas(n);
    for (std::size_t i = 0; i < n; ++i)
        lambdas[i] = grid.delta_values[i] - config.omega_b;

    const bool offsets_zero = config.detuning_offsets.a == 0.0 &&
                              config.detuning_offsets.c == 0.0 &&
                              config.detuning_offsets.m == 0.0;

    SpectrumTable table;
    table.provenance = config;
    table.rows.resize(n);

    if (offsets_zero) {
        std::vector<double> eps_re(n), eps_im(n), deps_re(n), deps_im(n);
        const auto params = kernels::response_params(config);
        kernels::eval_response_batch(params, lambdas.data(), n, eps_re.data(),
                                     eps_im.data(), deps_re.data(),
                                     deps_im.data());
        for (std::size_t i = 0; i < n; ++i) {
            const SidebandAmplitudes amps = solve_sidebands(config, lambdas[i]);
            const cplx eps_solve = epsilon_out(config, amps.c_plus);
            const cplx eps_kernel{eps_re[i], eps_im[i]};
            const double scale = std::abs(eps_solve);
            if (scale > 0.0 && std::abs(eps_kernel - eps_solve) > 1e-10 * scale) {
                std::ostringstream os;
                os << "closed form disagrees with linear solve at delta = "
                   << grid.delta_values[i] << " rad/s";
                throw NumericalError(os.str());
            }
            const PointObservables kobs =
                observables_from(eps_kernel, cplx{deps_re[i], deps_im[i]});
            const TransmissionResult t = transmission(eps_solve);
            SpectrumRow& row = table.rows[i];
            row.delta = grid.delta_values[i];
            row.lambda = lambdas[i];
            row.absorption = eps_solve.real();
            row.dispersion = eps_solve.imag();
            row.transmission = t.transmission;
            row.phase = t.phase;
            row.tau_eq8 = kobs.tau_eq8;
            row.tau_phase = kobs.tau_phase;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const SidebandAmplitudes amps = solve_sidebands(config, lambdas[i]);
            const cplx eps = epsilon_out(config, amps.c_plus);
            const cplx deps = epsilon_out_derivative_solve(config, lambdas[i]);
            const PointObservables obs = observables_from(eps, deps);
            SpectrumRow& row = table.rows[i];
            row.delta = grid.delta_values[i];
            row.lambda = lambdas[i];
            row.absorption = obs.absorption;
            row.dispersion = obs.dispersion;
            row.transmission = obs.transmission;
            row.phase = obs.phase;
            row.tau_eq8 = obs.tau_eq8;
            row.tau_phase = obs.tau_phase;
        }
    }
    return table;
}

FeatureReport extract_windows(const std::vector<double>& x,
                              const std::vector<double>& y, double prominence,
                              bool minima) {
    if (x.size() != y.size())
        throw std::invalid_argument("feature extraction: size mismatch");
    const std::size_t n = y.size();
    FeatureReport report;
    report.prominence_used = prominence;
    if (n < 3) return report;

    // Work on the minima orientation; maxima are found on the negated signal.
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = minima ? y[i] : -y[i];

    auto add_window = [&](std::size_t i) {
        // Flanking maxima: walk uphill on each side (grid edges count as
        // flanks when the rise is monotone to the boundary).
        std::size_t l = i;
        while (l > 0 && w[l - 1] >= w[l]) --l;
        std::size_t r = i;
        while (r + 1 < n && w[r + 1] >= w[r]) ++r;
        const double flank = std::min(w[l], w[r]);
        const double depth = flank - w[i];
        if (depth < prominence) return;

        const double level = w[i] + 0.5 * depth;
        // Half-depth crossings, linearly interpolated.
        double x_left = x[l];
        for (std::size_t k = i; k > l; --k) {
            if (w[k - 1] >= level) {
                const double f = (level - w[k]) / (w[k - 1] - w[k]);
                x_left = x[k] + f * (x[k - 1] - x[k]);
                break;
            }
        }
        double x_right = x[r];
        for (std::size_t k = i; k < r; ++k) {
            if (w[k + 1] >= level) {
                const double f = (level - w[k]) / (w[k + 1] - w[k]);
                x_right = x[k] + f * (x[k + 1] - x[k]);
                break;
            }
        }
        report.windows.push_back({x[i], x_right - x_left, y[i]});
    };

    auto add_peak = [&](std::size_t i) {
        std::size_t l = i;
        while (l > 0 && w[l - 1] <= w[l]) --l;
        std::size_t r = i;
        while (r + 1 < n && w[r + 1] <= w[r]) ++r;
        const double flank = std::max(w[l], w[r]);
        if (w[i] - flank < prominence) return;
        report.peaks.push_back({x[i], y[i]});
    };

    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (w[i] < w[i - 1] && w[i] < w[i + 1]) add_window(i);
        if (w[i] > w[i - 1] && w[i] > w[i + 1]) add_peak(i);
    }
    report.window_count = report.windows.size();
    return report;
}

FeatureReport extract_features(const SpectrumTable& table,
                               std::optional<double> prominence) {
    if (table.rows.empty())
        throw std::invalid_argument("feature extraction: empty table");
    const double omega_b = table.provenance.omega_b;
    std::vector<double> x(table.rows.size()), y(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        x[i] = table.rows[i].delta / omega_b;
        y[i] = table.rows[i].absorption;
    }
    const double y_max = *std::max_element(y.begin(), y.end());
    double prom = prominence.value_or(0.1 * y_max);
    if (prominence && (*prominence <= 0.0 || *prominence >= y_max))
        throw std::invalid_argument(
            "prominence must lie in (0, max absorption)");
    return extract_windows(x, y, prom, /*minima=*/true);
}

std::vector<WindowWidthPoint> window_width_vs_gm(
    const SystemConfig& config, const std::vector<double>& gm_values) {
    std::vector<WindowWidthPoint> out;
    out.reserve(gm_values.size());
    for (double gm : gm_values) {
        if (gm < 0.0 || !std::isfinite(gm))
            throw std::invalid_argument("g_m values must be nonnegative");
        SystemConfig cfg = config;
        cfg.couplings.g_m = gm;
        const SpectrumTable table = sweep_spectrum(cfg, default_grid(cfg));
        std::vector<double> x(table.rows.size()), t(table.rows.size());
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            x[i] = table.rows[i].delta / cfg.omega_b;
            t[i] = table.rows[i].transmission;
        }
        const double t_max = *std::max_element(t.begin(), t.end());
        const FeatureReport features =
            extract_windows(x, t, 0.1 * t_max, /*minima=*/false);

        double width = 0.0;
        double best_dist = std::numeric_limits<double>::infinity();
        double best_center = std::numeric_limits<double>::infinity();
        for (const auto& win : features.windows) {
            const double dist = std::abs(win.center - 1.0);
            if (dist < best_dist ||
                (dist == best_dist && win.center < best_center)) {
                best_dist = dist;
                best_center = win.center;
                width = win.width;
            }
        }
        out.push_back({gm, width});
    }
    return out;
}

DelaySurface delay_surface(const SystemConfig& config,
                           const std::vector<double>& eta_values,
                           const SweepGrid& delta_grid) {
    if (!(config.couplings.g_c > 0.0))
        throw std::invalid_argument("delay surface requires g_c > 0");
    check_config(config);
    check_grid(delta_grid);
    if (eta_values.empty())
        throw std::invalid_argument("eta grid is empty");

    const std::size_t nd = delta_grid.delta_values.size();
    std::vector<double> lambdas(nd);
    for (std::size_t j = 0; j < nd; ++j)
        lambdas[j] = delta_grid.delta_values[j] - config.omega_b;

    DelaySurface surf;
    surf.eta_values = eta_values;
    surf.delta_values = delta_grid.delta_values;
    surf.provenance = config;
    surf.tau.resize(eta_values.size() * nd);
    surf.max_tau = -std::numeric_limits<double>::infinity();
    surf.min_tau = std::numeric_limits<double>::infinity();

    std::vector<double> eps_re(nd), eps_im(nd), deps_re(nd), deps_im(nd);
    for (std::size_t i = 0; i < eta_values.size(); ++i) {
        if (eta_values[i] < 0.0)
            throw std::invalid_argument("eta must be nonnegative");
        SystemConfig cfg = config;
        cfg.couplings.g_m = eta_values[i] * config.couplings.g_c;
        const auto params = kernels::response_params(cfg);
        kernels::eval_response_batch(params, lambdas.data(), nd, eps_re.data(),
                                     eps_im.data(), deps_re.data(),
                                     deps_im.data());
        for (std::size_t j = 0; j < nd; ++j) {
            const PointObservables obs = observables_from(
                cplx{eps_re[j], eps_im[j]}, cplx{deps_re[j], deps_im[j]});
            const double tau = obs.tau_eq8;
            surf.tau[i * nd + j] = tau;
            if (std::isnan(tau)) continue;
            if (tau > surf.max_tau) {
                surf.max_tau = tau;
                surf.argmax_eta = i;
                surf.argmax_delta = j;
            }
            surf.min_tau = std::min(surf.min_tau, tau);
        }
    }
    return surf;
}

} // namespace aomm
