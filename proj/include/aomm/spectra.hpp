#pragma once

// Detuning sweeps, figure-level tables, and transparency-window extraction.

#include <cstddef>
#include <optional>
#include <vector>

#include "aomm/config.hpp"
#include "aomm/response.hpp"

namespace aomm {

enum class Refinement { uniform, center_refined };

struct SweepGrid {
    std::vector<double> delta_values; // strictly increasing, rad/s
    Refinement refinement = Refinement::uniform;

    // Construction parameters, retained so grids can be densified and
    // reported in manifests.
    double lo_frac = 0.0;
    double hi_frac = 0.0;
    std::size_t n_uniform = 0;
    double span_factor = 0.0;
    double spacing_divisor = 0.0;
    double ratio = 0.0;
};

// Symmetric uniform grid over delta/omega_b in [lo_frac, hi_frac].
SweepGrid make_uniform_grid(double omega_b, double lo_frac, double hi_frac,
                            std::size_t n_points);

// Uniform base grid plus a two-sided geometric ladder around delta = omega_b:
// points at +-spacing*ratio^k out to span, with spacing <= kappa_b/5 so the
// narrowest magnomechanical features are resolved. Includes delta = omega_b.
SweepGrid make_center_refined_grid(double omega_b, double kappa_b,
                                   double lo_frac, double hi_frac,
                                   std::size_t n_uniform,
                                   double span_factor = 1e3,
                                   double spacing_divisor = 5.0,
                                   double ratio = 1.25);

// Default sweep grid: 2001 uniform points over [0.5, 1.5] plus the geometric
// center refinement.
SweepGrid default_grid(const SystemConfig& config);

// Same span, roughly doubled density everywhere (uniform count doubled,
// ladder ratio square-rooted). Used by grid-stability checks.
SweepGrid densify(const SweepGrid& grid, const SystemConfig& config);

struct SpectrumRow {
    double delta;
    double lambda;
    double absorption;
    double dispersion;
    double transmission;
    double phase;
    double tau_eq8;
    double tau_phase;
};

struct SpectrumTable {
    std::vector<SpectrumRow> rows;
    SystemConfig provenance;
};

// One row per grid point, in grid order. Observables come from the linear
// solve; delays come from the analytic derivative. At zero offsets the
// closed form is cross-checked against the solve at every point and a
// disagreement aborts the sweep naming the offending delta.
SpectrumTable sweep_spectrum(const SystemConfig& config, const SweepGrid& grid);

struct TransparencyWindow {
    double center;          // delta/omega_b
    double width;           // delta/omega_b, at half depth
    double floor;           // y value at the window bottom
};

struct SpectralPeak {
    double center; // delta/omega_b
    double height;
};

struct FeatureReport {
    std::vector<TransparencyWindow> windows;
    std::vector<SpectralPeak> peaks;
    std::size_t window_count = 0;
    double prominence_used = 0.0;
};

// Windows are local minima of the absorption column flanked by local maxima
// on both sides, kept when the drop below the lower flanking maximum is at
// least `prominence` (absolute). Width is measured at half depth. Peaks use
// the mirrored rule. Default prominence: 0.1 * global max.
FeatureReport extract_features(const SpectrumTable& table,
                               std::optional<double> prominence = std::nullopt);

// Same extraction on an arbitrary signal; sense=false finds maxima-windows
// (used for transmission transparency).
FeatureReport extract_windows(const std::vector<double>& x,
                              const std::vector<double>& y, double prominence,
                              bool minima);

struct WindowWidthPoint {
    double g_m;   // rad/s
    double width; // delta/omega_b of the central transmission window
};

// Central transmission-window width (window nearest delta = omega_b) as a
// function of the magnon-phonon coupling.
std::vector<WindowWidthPoint> window_width_vs_gm(
    const SystemConfig& config, const std::vector<double>& gm_values);

struct DelaySurface {
    std::vector<double> eta_values;   // g_m / g_c
    std::vector<double> delta_values; // rad/s
    std::vector<double> tau;          // row-major [eta][delta], seconds
    SystemConfig provenance;
    double max_tau = 0.0;
    double min_tau = 0.0;
    std::size_t argmax_eta = 0;
    std::size_t argmax_delta = 0;

    double at(std::size_t i, std::size_t j) const {
        return tau[i * delta_values.size() + j];
    }
};

// tau (eq8 mode) on the full eta x delta lattice with g_m = eta * g_c.
// Requires g_c > 0.
DelaySurface delay_surface(const SystemConfig& config,
                           const std::vector<double>& eta_values,
                           const SweepGrid& delta_grid);

std::vector<double> linspace(double lo, double hi, std::size_t n);

} // namespace aomm
