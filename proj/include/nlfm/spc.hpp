#pragma once

#include <vector>

#include "nlfm/dft.hpp"
#include "nlfm/spectral_target.hpp"

namespace nlfm {

// Time-domain phase law of the initial waveform.
struct PhaseLaw {
    std::vector<double> time_grid;  // seconds, t_n = -T/2 + n/fs
    std::vector<double> phase_phi;  // radians, anchored to 0 at the center sample
    std::vector<double> inst_freq;  // hertz
};

// Group delay over the in-band grid, ascending in frequency. High PSD means
// the sweep lingers: t(f) is the normalized cumulative PSD mapped onto
// [-T/2, +T/2] with both endpoints hit exactly.
struct GroupDelay {
    std::vector<double> freq;    // hertz, ascending
    std::vector<double> t_of_f;  // seconds, nondecreasing
};

std::vector<double> sample_times(const DesignParams& params);

GroupDelay group_delay_from_psd(const SpectralTarget& target);

// Monotone piecewise-linear inverse of t(f) evaluated on time_grid. Queries
// landing exactly on a flat run of t resolve to the run's lowest frequency;
// queries outside the range clamp to the end frequencies.
std::vector<double> invert_group_delay(const GroupDelay& gd,
                                       const std::vector<double>& time_grid);

// phase_phi(n) = 2*pi * cumulative trapezoidal integral of inst_freq, with
// the center sample re-anchored to phase 0.
PhaseLaw phase_from_frequency(const std::vector<double>& inst_freq,
                              const DesignParams& params);

// x0(n) = exp(j*phase_phi(n)).
cvec initial_waveform(const PhaseLaw& law);

// theta0(k) = phase of the K-point forward transform of x0.
std::vector<double> initial_spectral_phase(const PhaseLaw& law,
                                           const DesignParams& params);

} // namespace nlfm
