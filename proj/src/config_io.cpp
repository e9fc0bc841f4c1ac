#include "aomm/config_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "aomm/errors.hpp"

namespace aomm {

using nlohmann::json;

namespace {

double require_finite_number(const json& j, const std::string& key) {
    if (!j.is_number())
        throw ConfigError("field '" + key + "' must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v))
        throw ConfigError("field '" + key + "' is not finite");
    return v;
}

} // namespace

SystemConfig parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed JSON at byte " + std::to_string(e.byte) +
                          ": " + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config root must be a JSON object");

    static const std::set<std::string> known = {
        "omega_b_over_2pi_hz",  "kappa_a_over_2pi_hz", "kappa_c_over_2pi_hz",
        "kappa_m_over_2pi_hz",  "kappa_b_over_2pi_hz", "g_a_over_2pi_hz",
        "g_c_over_2pi_hz",      "g_m_over_2pi_hz",     "probe_amplitude",
        "sign_convention",      "detuning_offsets_over_2pi_hz",
    };
    for (const auto& item : j.items()) {
        if (!known.count(item.key()))
            throw ConfigError("unknown config key: '" + item.key() + "'");
    }

    std::map<std::string, double> freqs;
    static const std::map<std::string, std::string> freq_keys = {
        {"omega_b_over_2pi_hz", "omega_b"}, {"kappa_a_over_2pi_hz", "kappa_a"},
        {"kappa_c_over_2pi_hz", "kappa_c"}, {"kappa_m_over_2pi_hz", "kappa_m"},
        {"kappa_b_over_2pi_hz", "kappa_b"}, {"g_a_over_2pi_hz", "g_a"},
        {"g_c_over_2pi_hz", "g_c"},         {"g_m_over_2pi_hz", "g_m"},
    };
    for (const auto& [json_key, field] : freq_keys) {
        if (!j.contains(json_key))
            throw ConfigError("missing config key: '" + json_key + "'");
        freqs[field] = require_finite_number(j.at(json_key), json_key);
    }

    SystemConfig cfg = from_hz_over_2pi(freqs);

    if (j.contains("probe_amplitude")) {
        cfg.probe_amplitude = require_finite_number(j.at("probe_amplitude"),
                                                    "probe_amplitude");
        if (cfg.probe_amplitude < 0.0)
            throw ConfigError("probe_amplitude must be nonnegative");
    }

    if (j.contains("sign_convention")) {
        const auto& sc = j.at("sign_convention");
        if (!sc.is_string())
            throw ConfigError("sign_convention must be a string");
        const std::string s = sc.get<std::string>();
        if (s == "standard")
            cfg.sign_convention = SignConvention::standard;
        else if (s == "paper")
            cfg.sign_convention = SignConvention::paper;
        else
            throw ConfigError("sign_convention must be \"paper\" or \"standard\", got \"" +
                              s + "\"");
    }

    if (j.contains("detuning_offsets_over_2pi_hz")) {
        const auto& off = j.at("detuning_offsets_over_2pi_hz");
        if (!off.is_object())
            throw ConfigError("detuning_offsets_over_2pi_hz must be an object");
        for (const auto& item : off.items()) {
            const std::string& k = item.key();
            const double v =
                require_finite_number(item.value(), "detuning_offsets." + k);
            if (k == "a")
                cfg.detuning_offsets.a = two_pi * v;
            else if (k == "c")
                cfg.detuning_offsets.c = two_pi * v;
            else if (k == "m")
                cfg.detuning_offsets.m = two_pi * v;
            else
                throw ConfigError("unknown config key: 'detuning_offsets_over_2pi_hz." +
                                  k + "'");
        }
    }
    return cfg;
}

SystemConfig load_config_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_json(buf.str());
}

std::string config_to_json(const SystemConfig& config) {
    const auto freqs = to_hz_over_2pi(config);
    json j;
    j["omega_b_over_2pi_hz"] = freqs.at("omega_b");
    j["kappa_a_over_2pi_hz"] = freqs.at("kappa_a");
    j["kappa_c_over_2pi_hz"] = freqs.at("kappa_c");
    j["kappa_m_over_2pi_hz"] = freqs.at("kappa_m");
    j["kappa_b_over_2pi_hz"] = freqs.at("kappa_b");
    j["g_a_over_2pi_hz"] = freqs.at("g_a");
    j["g_c_over_2pi_hz"] = freqs.at("g_c");
    j["g_m_over_2pi_hz"] = freqs.at("g_m");
    j["probe_amplitude"] = config.probe_amplitude;
    j["sign_convention"] = to_string(config.sign_convention);
    j["detuning_offsets_over_2pi_hz"] = {
        {"a", config.detuning_offsets.a / two_pi},
        {"c", config.detuning_offsets.c / two_pi},
        {"m", config.detuning_offsets.m / two_pi},
    };
    return j.dump(2);
}

} // namespace aomm
