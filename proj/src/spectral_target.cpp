#include "nlfm/spectral_target.hpp"

#include <algorithm>
#include <cmath>

#include "nlfm/errors.hpp"

namespace nlfm {

double bin_frequency(int k, int K, double fs) {
    return (2 * k < K) ? k * fs / K : (k - K) * fs / K;
}

SpectralTarget build_spectral_target(const std::vector<double>& window_psd,
                                     const DesignParams& params) {
    const int K = params.grid_size_K;
    const int M = static_cast<int>(window_psd.size());
    if (M < 2)
        throw invalid_parameter("window PSD needs at least 2 samples");
    for (double v : window_psd)
        if (v < 0.0)
            throw invalid_parameter("window PSD must be nonnegative");

    SpectralTarget target;
    target.params = params;
    target.magnitude.assign(K, 0.0);
    const double B = params.bandwidth_B;
    for (int k = 0; k < K; ++k) {
        double f = bin_frequency(k, K, params.sample_rate_fs);
        if (std::abs(f) > B / 2) continue;
        target.band_bins.push_back(k);
        // Linear interpolation of the sampled PSD at this bin's frequency.
        double u = (f + B / 2) / B * (M - 1);
        int i0 = std::clamp(static_cast<int>(std::floor(u)), 0, M - 2);
        double frac = u - i0;
        double v = window_psd[i0] * (1.0 - frac) + window_psd[i0 + 1] * frac;
        target.magnitude[k] = std::sqrt(std::max(v, 0.0));
    }

    double peak =
        *std::max_element(target.magnitude.begin(), target.magnitude.end());
    if (!(peak > 0.0))
        throw degenerate_input("window PSD is zero everywhere in the band");
    for (double& v : target.magnitude) v /= peak;
    return target;
}

} // namespace nlfm
