#pragma once

// Physical parameter set of the four-mode chain: a two-level atomic ensemble
// (a) coupled to an optical cavity (c), the cavity coupled to a mechanical
// mode (b) by radiation pressure, and a magnon mode (m) coupled to the same
// mechanical mode by magnetostriction.
//
// All quantities are stored as angular rates in rad/s. The "/2pi" Hz
// convention exists only at the I/O boundary (see from_hz_over_2pi /
// to_hz_over_2pi and the JSON schema in config_io.hpp).

#include <map>
#include <string>
#include <vector>

namespace aomm {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Angular decay rates. kappa_b is the mechanical damping rate (the symbol
// gamma_b is sometimes used for it; there is no second mechanical rate).
struct ModeRates {
    double kappa_a = 0.0;
    double kappa_c = 0.0;
    double kappa_m = 0.0;
    double kappa_b = 0.0;
};

// Effective linearized coupling strengths. Zero disables the branch exactly.
struct Couplings {
    double g_a = 0.0; // atom ensemble <-> cavity
    double g_c = 0.0; // cavity <-> phonon
    double g_m = 0.0; // magnon <-> phonon
};

// Per-mode detunings relative to the mechanical frequency:
// Delta_a - omega_b, Delta_c - omega_b, Delta_m - omega_b.
// All zero in the resonant regime the default configuration assumes.
struct DetuningOffsets {
    double a = 0.0;
    double c = 0.0;
    double m = 0.0;
};

// Orientation of the stationary sideband system.
//   standard: all-positive-damping denominators (kappa - i*lambda); the
//             default, and the orientation consistent with a damped
//             time-domain model.
//   paper:    the mirrored reading (lambda -> -lambda); produces the same
//             response at lambda = 0 and the mirror image elsewhere.
enum class SignConvention { standard, paper };

std::string to_string(SignConvention c);

struct SystemConfig {
    double omega_b = 0.0; // mechanical angular frequency, rad/s
    ModeRates rates;
    Couplings couplings;
    double probe_amplitude = 1.0; // eps_p, dimensionless scale
    DetuningOffsets detuning_offsets;
    SignConvention sign_convention = SignConvention::standard;

    // Inert provenance values that do not enter any computation
    // (e.g. magnon frequency, drive wavelength).
    std::map<std::string, double> metadata;
};

struct Diagnostic {
    enum class Severity { warning, error };
    Severity severity;
    std::string message;
};

// Baseline configuration: omega_b/2pi = 40 MHz, kappa_b/2pi = 100 Hz,
// kappa_a/2pi = kappa_m/2pi = 1 MHz, kappa_c/2pi = 2 MHz, couplings zero,
// offsets zero, standard convention.
SystemConfig default_config();

// Builds a config from named frequencies given in Hz (value/2pi convention).
// Required keys: omega_b, kappa_a, kappa_c, kappa_m, kappa_b, g_a, g_c, g_m.
// Throws ConfigError on missing keys, non-finite values, or non-positive
// rates.
SystemConfig from_hz_over_2pi(const std::map<std::string, double>& values_hz);

// Inverse of from_hz_over_2pi for the frequency-valued fields.
std::map<std::string, double> to_hz_over_2pi(const SystemConfig& config);

// Returns diagnostics instead of throwing: errors for non-positive rates or
// non-finite fields, warnings when a decay rate exceeds omega_b/10 (the
// resolved-sideband assumption becomes dubious there).
std::vector<Diagnostic> validate(const SystemConfig& config);

bool has_errors(const std::vector<Diagnostic>& diags);

} // namespace aomm
