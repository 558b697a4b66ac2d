#pragma once

#include <optional>
#include <vector>

#include "nlfm/pia.hpp"

namespace nlfm {

// Floor applied when converting exact zeros to dB.
inline constexpr double kDbFloor = -300.0;

// One-sided normalized autocorrelation magnitude in dB over lags 0..N-1,
// computed by zero-padded transforms (power-of-two length >= 2N).
std::vector<double> autocorrelation_db(const Waveform& x);

// Sidelobe metrics share one mainlobe rule: the mainlobe ends at the first
// local minimum of |ACF| (non-strict); sidelobes are every lag beyond it.
// Returns nullopt when the ACF has no local minimum (e.g. a pure triangle).
std::optional<double> psl_db(const std::vector<double>& acf_db);
std::optional<double> isl_db(const std::vector<double>& acf_db);

// Two-sided -3 dB width in samples: twice the linearly interpolated lag of
// the first -3 dB crossing of the dB curve.
double mainlobe_width_samples(const std::vector<double>& acf_db);

// f(n) from the unwrapped sample phase: central differences in the
// interior, one-sided at the two ends.
std::vector<double> instantaneous_frequency(const Waveform& x, double fs);

struct AnalysisReport {
    std::vector<double> acf_db;
    std::optional<double> psl_db;
    std::optional<double> isl_db;
    double mainlobe_width_samples = 0.0;
    std::vector<double> inst_freq;
};

AnalysisReport analyze(const Waveform& x, double fs);

} // namespace nlfm
