#include "nlfm/spc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nlfm {

std::vector<double> sample_times(const DesignParams& params) {
    std::vector<double> t(params.num_samples_N);
    const double half_T = 0.5 * params.pulse_width_T;
    for (int n = 0; n < params.num_samples_N; ++n)
        t[n] = -half_T + static_cast<double>(n) / params.sample_rate_fs;
    return t;
}

GroupDelay group_delay_from_psd(const SpectralTarget& target) {
    if (target.band_bins.size() < 2)
        throw degenerate_input("group delay needs at least two in-band bins");

    const int K = target.params.grid_size_K;
    const double fs = target.params.sample_rate_fs;
    const double T = target.params.pulse_width_T;

    // Band bins are ascending in index; order them by frequency so the
    // cumulative integral runs across the band from -B/2 to +B/2.
    std::vector<std::pair<double, double>> pts;  // (frequency, PSD)
    pts.reserve(target.band_bins.size());
    for (int k : target.band_bins) {
        const double m = target.magnitude[k];
        pts.emplace_back(bin_frequency(k, K, fs), m * m);
    }
    std::sort(pts.begin(), pts.end());

    GroupDelay gd;
    const size_t M = pts.size();
    gd.freq.resize(M);
    std::vector<double> cum(M);
    gd.freq[0] = pts[0].first;
    cum[0] = 0.0;
    for (size_t i = 1; i < M; ++i) {
        gd.freq[i] = pts[i].first;
        cum[i] = cum[i - 1] + 0.5 * (pts[i].second + pts[i - 1].second) *
                                  (pts[i].first - pts[i - 1].first);
    }
    const double total = cum.back();
    if (!(total > 0.0))
        throw degenerate_input("in-band spectral power integrates to zero");

    gd.t_of_f.resize(M);
    for (size_t i = 0; i < M; ++i)
        gd.t_of_f[i] = -0.5 * T + T * (cum[i] / total);
    return gd;
}

std::vector<double> invert_group_delay(const GroupDelay& gd,
                                       const std::vector<double>& time_grid) {
    const auto& t = gd.t_of_f;
    const auto& f = gd.freq;
    if (t.size() != f.size() || t.size() < 2)
        throw degenerate_input("group delay table needs matching arrays of length >= 2");
    for (size_t i = 1; i < t.size(); ++i)
        if (t[i] < t[i - 1])
            throw degenerate_input("group delay must be nondecreasing in frequency");

    std::vector<double> out(time_grid.size());
    for (size_t q = 0; q < time_grid.size(); ++q) {
        const double tau = time_grid[q];
        if (tau <= t.front()) {
            out[q] = f.front();
            continue;
        }
        if (tau >= t.back()) {
            out[q] = f.back();
            continue;
        }
        auto it = std::lower_bound(t.begin(), t.end(), tau);
        const size_t j = static_cast<size_t>(it - t.begin());
        if (*it == tau) {
            // Exact hit: lower_bound lands on the first entry of a flat run,
            // i.e. the run's lowest frequency.
            out[q] = f[j];
        } else {
            const size_t i = j - 1;
            out[q] = f[i] + (f[i + 1] - f[i]) * (tau - t[i]) / (t[i + 1] - t[i]);
        }
    }
    return out;
}

PhaseLaw phase_from_frequency(const std::vector<double>& inst_freq,
                              const DesignParams& params) {
    const int N = params.num_samples_N;
    if (static_cast<int>(inst_freq.size()) != N)
        throw invalid_parameter("instantaneous frequency must have one entry per sample");

    PhaseLaw law;
    law.time_grid = sample_times(params);
    law.inst_freq = inst_freq;
    law.phase_phi.assign(N, 0.0);

    const double scale = 2.0 * std::numbers::pi / params.sample_rate_fs;
    double acc = 0.0;
    for (int n = 1; n < N; ++n) {
        acc += 0.5 * (inst_freq[n - 1] + inst_freq[n]);
        law.phase_phi[n] = acc * scale;
    }
    const double anchor = law.phase_phi[N / 2];
    for (double& p : law.phase_phi) p -= anchor;
    return law;
}

cvec initial_waveform(const PhaseLaw& law) {
    cvec x(law.phase_phi.size());
    for (size_t n = 0; n < x.size(); ++n)
        x[n] = std::polar(1.0, law.phase_phi[n]);
    return x;
}

std::vector<double> initial_spectral_phase(const PhaseLaw& law,
                                           const DesignParams& params) {
    DftOperator op(params.grid_size_K, params.num_samples_N);
    const cvec X = op.forward(initial_waveform(law));
    std::vector<double> theta(X.size());
    for (size_t k = 0; k < X.size(); ++k) theta[k] = phase(X[k]);
    return theta;
}

} // namespace nlfm
