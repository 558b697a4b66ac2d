#pragma once

#include <vector>

#include "nlfm/params.hpp"

namespace nlfm {

// Desired spectral magnitude on the length-K DFT grid: the square root of
// the window PSD inside the band, zero outside, peak normalized to 1.
struct SpectralTarget {
    std::vector<double> magnitude;  // length K
    std::vector<int> band_bins;     // ascending bin indices with |f_k| <= B/2
    DesignParams params;
};

// Centered frequency of grid bin k: k*fs/K for the lower half of the grid,
// (k-K)*fs/K for the upper half (standard two-sided baseband convention).
double bin_frequency(int k, int K, double fs);

SpectralTarget build_spectral_target(const std::vector<double>& window_psd,
                                     const DesignParams& params);

} // namespace nlfm
