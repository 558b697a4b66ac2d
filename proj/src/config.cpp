#include "nlfm/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace nlfm {

DesignParams RunConfig::design_params() const {
    return make_design_params(pulse_width_us * 1e-6, bandwidth_mhz * 1e6,
                              sample_rate_mhz * 1e6, grid_size_k);
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    double v = 0.0;
    const char* end = value.data() + value.size();
    auto res = std::from_chars(value.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw invalid_parameter("config key '" + key + "': bad number '" + value + "'");
    return v;
}

int parse_int(const std::string& key, const std::string& value) {
    int v = 0;
    const char* end = value.data() + value.size();
    auto res = std::from_chars(value.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw invalid_parameter("config key '" + key + "': bad integer '" + value + "'");
    return v;
}

} // namespace

void load_config_file(RunConfig& config, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw invalid_parameter("cannot read config file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();

    // window.kind resets the window parameters before any window.param.*
    // override applies, so collect the overrides and replay them after the
    // kind is known.
    bool kind_seen = false;
    WindowKind kind = config.window.kind;
    std::vector<std::pair<std::string, std::string>> window_params;

    std::string line;
    while (std::getline(buf, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw invalid_parameter("config line is not key = value: '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "pulse_width_us") {
            config.pulse_width_us = parse_double(key, value);
        } else if (key == "bandwidth_mhz") {
            config.bandwidth_mhz = parse_double(key, value);
        } else if (key == "sample_rate_mhz") {
            config.sample_rate_mhz = parse_double(key, value);
        } else if (key == "grid_size_k") {
            config.grid_size_k = parse_int(key, value);
        } else if (key == "window.kind") {
            kind = parse_window_kind(value);
            kind_seen = true;
        } else if (key.rfind("window.param.", 0) == 0) {
            window_params.emplace_back(key, value);
        } else if (key == "stop.max_iterations") {
            config.stop.max_iterations = parse_int(key, value);
        } else if (key == "stop.rel_tolerance") {
            config.stop.rel_tolerance = parse_double(key, value);
        } else {
            throw invalid_parameter("unknown config key: '" + key + "'");
        }
    }

    if (kind_seen) config.window = default_window(kind);
    for (const auto& [key, value] : window_params) {
        if (key == "window.param.pedestal") {
            config.window.pedestal = parse_double(key, value);
        } else if (key == "window.param.sll_db") {
            config.window.sll_db = parse_double(key, value);
        } else if (key == "window.param.nbar") {
            config.window.nbar = parse_int(key, value);
        } else if (key == "window.param.atten_db") {
            config.window.atten_db = parse_double(key, value);
        } else if (key == "window.param.beta") {
            config.window.beta = parse_double(key, value);
        } else {
            throw invalid_parameter("unknown config key: '" + key + "'");
        }
    }
}

void validate(const RunConfig& config) {
    validate(config.stop);
    config.design_params();  // throws on inconsistent scale parameters
}

} // namespace nlfm
