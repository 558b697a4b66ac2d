#include "nlfm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nlfm {

namespace {

int pow2_at_least(int n) {
    int p = 1;
    while (p < n) p *= 2;
    return p;
}

// Index of the first (non-strict) local minimum of the ACF curve, i.e. the
// lag where the mainlobe ends. Nullopt for curves that only fall (triangle).
std::optional<size_t> mainlobe_end(const std::vector<double>& acf_db) {
    for (size_t t = 1; t + 1 < acf_db.size(); ++t)
        if (acf_db[t] <= acf_db[t - 1] && acf_db[t] <= acf_db[t + 1])
            return t;
    return std::nullopt;
}

} // namespace

std::vector<double> autocorrelation_db(const Waveform& x) {
    const int N = static_cast<int>(x.samples.size());
    if (N < 2) throw invalid_parameter("autocorrelation needs at least two samples");

    // Zero-padded circular correlation of length >= 2N is the linear ACF.
    const int L = pow2_at_least(2 * N);
    DftOperator op(L, L);
    cvec padded(L, 0.0);
    std::copy(x.samples.begin(), x.samples.end(), padded.begin());
    const cvec X = op.forward(padded);
    cvec spectrum(L);
    for (int k = 0; k < L; ++k) spectrum[k] = std::norm(X[k]);
    const cvec r = op.adjoint(spectrum);  // unnormalized inverse; scale below

    const double peak = std::abs(r[0]);
    if (!(peak > 0.0))
        throw degenerate_input("autocorrelation peak is zero");
    std::vector<double> acf_db(N);
    for (int tau = 0; tau < N; ++tau) {
        const double ratio = std::abs(r[tau]) / peak;  // 1/L factors cancel
        acf_db[tau] = ratio > 0.0 ? 20.0 * std::log10(ratio) : kDbFloor;
        acf_db[tau] = std::max(acf_db[tau], kDbFloor);
    }
    return acf_db;
}

std::optional<double> psl_db(const std::vector<double>& acf_db) {
    const auto m = mainlobe_end(acf_db);
    if (!m) return std::nullopt;
    return *std::max_element(acf_db.begin() + *m + 1, acf_db.end());
}

std::optional<double> isl_db(const std::vector<double>& acf_db) {
    const auto m = mainlobe_end(acf_db);
    if (!m) return std::nullopt;
    double power = 0.0;
    for (size_t t = *m + 1; t < acf_db.size(); ++t) {
        const double a = std::pow(10.0, acf_db[t] / 20.0);
        power += a * a;
    }
    // The one-sided sum counts each sidelobe lag once; the ACF is even, so
    // the two-sided energy is twice that.
    return 10.0 * std::log10(2.0 * power);
}

double mainlobe_width_samples(const std::vector<double>& acf_db) {
    const double level = -3.0;
    for (size_t i = 1; i < acf_db.size(); ++i) {
        if (acf_db[i] <= level) {
            const double frac =
                (level - acf_db[i - 1]) / (acf_db[i] - acf_db[i - 1]);
            return 2.0 * (static_cast<double>(i - 1) + frac);
        }
    }
    // Curve never reaches -3 dB; report the full (two-sided) extent.
    return 2.0 * static_cast<double>(acf_db.size() - 1);
}

std::vector<double> instantaneous_frequency(const Waveform& x, double fs) {
    const int N = static_cast<int>(x.samples.size());
    if (N < 2)
        throw invalid_parameter("instantaneous frequency needs at least two samples");

    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> u(N);  // unwrapped phase
    u[0] = phase(x.samples[0]);
    for (int n = 1; n < N; ++n)
        u[n] = u[n - 1] + std::remainder(phase(x.samples[n]) - phase(x.samples[n - 1]), two_pi);

    std::vector<double> f(N);
    f[0] = (u[1] - u[0]) * fs / two_pi;
    f[N - 1] = (u[N - 1] - u[N - 2]) * fs / two_pi;
    for (int n = 1; n + 1 < N; ++n)
        f[n] = (u[n + 1] - u[n - 1]) * fs / (2.0 * two_pi);
    return f;
}

AnalysisReport analyze(const Waveform& x, double fs) {
    AnalysisReport report;
    report.acf_db = autocorrelation_db(x);
    report.psl_db = psl_db(report.acf_db);
    report.isl_db = isl_db(report.acf_db);
    report.mainlobe_width_samples = mainlobe_width_samples(report.acf_db);
    report.inst_freq = instantaneous_frequency(x, fs);
    return report;
}

} // namespace nlfm
