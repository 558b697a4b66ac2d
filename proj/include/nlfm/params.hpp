#pragma once

#include <string>

#include "nlfm/errors.hpp"

namespace nlfm {

struct DesignParams {
    double pulse_width_T;   // seconds
    double bandwidth_B;     // hertz
    double sample_rate_fs;  // hertz
    int grid_size_K;
    int num_samples_N;      // round(T * fs)
};

// K = 0 selects the default grid: the smallest power of two >= 2N.
DesignParams make_design_params(double T, double B, double fs, int K = 0);

enum class WindowKind { RaisedCosine, Taylor, Chebyshev, Kaiser };

// PSD shape over the design band. Only the fields for the active kind are
// read; the initial values are the calibrated per-kind defaults (see README).
struct WindowSpec {
    WindowKind kind = WindowKind::Kaiser;
    double pedestal = 0.021;  // RaisedCosine: h in [0, 1]
    double sll_db = -41.4;    // Taylor: sidelobe level, dB (negative)
    int nbar = 7;             // Taylor: near-in sidelobe count
    double atten_db = 43.6;   // Chebyshev: sidelobe attenuation, dB (positive)
    double beta = 4.68;       // Kaiser: shape parameter, >= 0
};

WindowSpec default_window(WindowKind kind);

const char* window_kind_name(WindowKind kind);
WindowKind parse_window_kind(const std::string& name);

struct StopConfig {
    int max_iterations = 1000;
    double rel_tolerance = 1e-9;
};

void validate(const StopConfig& stop);

} // namespace nlfm
