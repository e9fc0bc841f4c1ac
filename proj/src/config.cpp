#include "aomm/config.hpp"

#include <cmath>

#include "aomm/errors.hpp"

namespace aomm {

std::string to_string(SignConvention c) {
    return c == SignConvention::standard ? "standard" : "paper";
}

SystemConfig default_config() {
    SystemConfig cfg;
    cfg.omega_b = two_pi * 40.0e6;
    cfg.rates.kappa_a = two_pi * 1.0e6;
    cfg.rates.kappa_c = two_pi * 2.0e6;
    cfg.rates.kappa_m = two_pi * 1.0e6;
    cfg.rates.kappa_b = two_pi * 100.0;
    cfg.couplings = {};
    cfg.probe_amplitude = 1.0;
    cfg.detuning_offsets = {};
    cfg.sign_convention = SignConvention::standard;
    // Carried for provenance only; nothing downstream reads these.
    cfg.metadata["omega_m_over_2pi_hz"] = 10.0e9;
    cfg.metadata["drive_wavelength_m"] = 1064.0e-9;
    return cfg;
}

namespace {

const char* const kRequiredKeys[] = {
    "omega_b", "kappa_a", "kappa_c", "kappa_m", "kappa_b", "g_a", "g_c", "g_m",
};

bool is_rate_key(const std::string& key) {
    return key == "omega_b" || key.rfind("kappa_", 0) == 0;
}

} // namespace

SystemConfig from_hz_over_2pi(const std::map<std::string, double>& values_hz) {
    for (const char* key : kRequiredKeys) {
        auto it = values_hz.find(key);
        if (it == values_hz.end())
            throw ConfigError(std::string("missing frequency field: ") + key);
        if (!std::isfinite(it->second))
            throw ConfigError(std::string("non-finite value for field: ") + key);
        if (is_rate_key(key) && it->second <= 0.0)
            throw ConfigError(std::string("non-positive rate: ") + key);
        if (!is_rate_key(key) && it->second < 0.0)
            throw ConfigError(std::string("negative coupling: ") + key);
    }
    SystemConfig cfg;
    cfg.omega_b = two_pi * values_hz.at("omega_b");
    cfg.rates.kappa_a = two_pi * values_hz.at("kappa_a");
    cfg.rates.kappa_c = two_pi * values_hz.at("kappa_c");
    cfg.rates.kappa_m = two_pi * values_hz.at("kappa_m");
    cfg.rates.kappa_b = two_pi * values_hz.at("kappa_b");
    cfg.couplings.g_a = two_pi * values_hz.at("g_a");
    cfg.couplings.g_c = two_pi * values_hz.at("g_c");
    cfg.couplings.g_m = two_pi * values_hz.at("g_m");
    return cfg;
}

std::map<std::string, double> to_hz_over_2pi(const SystemConfig& config) {
    return {
        {"omega_b", config.omega_b / two_pi},
        {"kappa_a", config.rates.kappa_a / two_pi},
        {"kappa_c", config.rates.kappa_c / two_pi},
        {"kappa_m", config.rates.kappa_m / two_pi},
        {"kappa_b", config.rates.kappa_b / two_pi},
        {"g_a", config.couplings.g_a / two_pi},
        {"g_c", config.couplings.g_c / two_pi},
        {"g_m", config.couplings.g_m / two_pi},
    };
}

std::vector<Diagnostic> validate(const SystemConfig& config) {
    std::vector<Diagnostic> diags;
    auto error = [&](const std::string& m) {
        diags.push_back({Diagnostic::Severity::error, m});
    };
    auto warning = [&](const std::string& m) {
        diags.push_back({Diagnostic::Severity::warning, m});
    };

    const struct {
        const char* name;
        double value;
    } rates[] = {
        {"omega_b", config.omega_b},
        {"kappa_a", config.rates.kappa_a},
        {"kappa_c", config.rates.kappa_c},
        {"kappa_m", config.rates.kappa_m},
        {"kappa_b", config.rates.kappa_b},
    };
    for (const auto& r : rates) {
        if (!std::isfinite(r.value))
            error(std::string(r.name) + " is not finite");
        else if (r.value <= 0.0)
            error(std::string(r.name) + " must be strictly positive");
    }

    const struct {
        const char* name;
        double value;
    } couplings[] = {
        {"g_a", config.couplings.g_a},
        {"g_c", config.couplings.g_c},
        {"g_m", config.couplings.g_m},
    };
    for (const auto& g : couplings) {
        if (!std::isfinite(g.value))
            error(std::string(g.name) + " is not finite");
        else if (g.value < 0.0)
            error(std::string(g.name) + " must be nonnegative");
    }

    if (!std::isfinite(config.probe_amplitude) || config.probe_amplitude < 0.0)
        error("probe_amplitude must be a finite nonnegative real");
    else if (config.probe_amplitude == 0.0)
        warning("probe_amplitude is zero; response functionals are undefined");

    for (double off : {config.detuning_offsets.a, config.detuning_offsets.c,
                       config.detuning_offsets.m}) {
        if (!std::isfinite(off)) {
            error("detuning offset is not finite");
            break;
        }
    }

    if (config.omega_b > 0.0 && std::isfinite(config.omega_b)) {
        for (const auto& r : rates) {
            if (std::string(r.name) == "omega_b") continue;
            if (std::isfinite(r.value) && r.value > config.omega_b / 10.0)
                warning(std::string(r.name) +
                        " exceeds omega_b/10; sideband resolution is marginal");
        }
    }
    return diags;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == Diagnostic::Severity::error) return true;
    return false;
}

} // namespace aomm
