#pragma once

#include <string>
#include <vector>

#include "nlfm/params.hpp"

namespace nlfm {

// Assembled run configuration. Scalar fields mirror the config-file keys;
// design_params() resolves them (and the auto grid size) into DesignParams.
struct RunConfig {
    double pulse_width_us = 2.5;
    double bandwidth_mhz = 100.0;
    double sample_rate_mhz = 1000.0;
    int grid_size_k = 0;  // 0 = auto: smallest power of two >= 2N
    WindowSpec window;
    StopConfig stop;

    DesignParams design_params() const;
};

// Parses a flat key = value file ('#' lines are comments). Recognized keys:
// pulse_width_us, bandwidth_mhz, sample_rate_mhz, grid_size_k, window.kind,
// window.param.{pedestal,sll_db,nbar,atten_db,beta},
// stop.max_iterations, stop.rel_tolerance. window.kind resets the window
// parameters to that kind's defaults before window.param.* overrides apply,
// regardless of key order. Unknown keys and malformed values are rejected.
void load_config_file(RunConfig& config, const std::string& path);

void validate(const RunConfig& config);

} // namespace nlfm
