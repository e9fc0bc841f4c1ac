#pragma once

// JSON config schema (all frequencies are value/2pi in Hz):
//
// {
//   "omega_b_over_2pi_hz": 40e6,
//   "kappa_a_over_2pi_hz": 1e6,
//   "kappa_c_over_2pi_hz": 2e6,
//   "kappa_m_over_2pi_hz": 1e6,
//   "kappa_b_over_2pi_hz": 100.0,
//   "g_a_over_2pi_hz": 0.0,
//   "g_c_over_2pi_hz": 8e6,
//   "g_m_over_2pi_hz": 8e6,
//   "probe_amplitude": 1.0,                        (optional, default 1)
//   "sign_convention": "standard",                 (optional, "standard"|"paper")
//   "detuning_offsets_over_2pi_hz": {"a":0,"c":0,"m":0}   (optional)
// }
//
// Unknown keys are rejected with a diagnostic naming the key.

#include <string>

#include "aomm/config.hpp"

namespace aomm {

// Throws ConfigError; malformed JSON reports the byte offset of the failure.
SystemConfig load_config_json(const std::string& path);
SystemConfig parse_config_json(const std::string& text);

std::string config_to_json(const SystemConfig& config);

} // namespace aomm
