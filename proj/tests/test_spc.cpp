#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "nlfm/pipeline.hpp"
#include "nlfm/spc.hpp"
#include "nlfm/window.hpp"
#include "oracle.hpp"

using nlfm::DesignParams;
using nlfm::GroupDelay;

namespace {

constexpr double kPi = std::numbers::pi;

DesignParams paper_scale() {
    return nlfm::make_design_params(2.5e-6, 100e6, 1000e6);
}

// Plain piecewise-linear interpolation (strictly increasing xs) for checks.
double lerp_at(const std::vector<double>& xs, const std::vector<double>& ys,
               double x) {
    REQUIRE(x >= xs.front());
    REQUIRE(x <= xs.back());
    size_t i = 1;
    while (xs[i] < x) ++i;
    const double f = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + f * (ys[i] - ys[i - 1]);
}

nlfm::SpectralTarget target_for(const nlfm::WindowSpec& spec,
                                const DesignParams& params) {
    return nlfm::build_spectral_target(
        nlfm::make_window(spec, nlfm::kWindowPoints), params);
}

} // namespace

TEST_CASE("sample times run from -T/2 in 1/fs steps") {
    const auto params = nlfm::make_design_params(1.0, 2.0, 8.0);
    const auto t = nlfm::sample_times(params);
    REQUIRE(t.size() == 8);
    CHECK(t[0] == -0.5);
    for (int n = 1; n < 8; ++n)
        CHECK(t[n] - t[n - 1] == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("rectangular PSD gives a linear group delay") {
    const auto params = paper_scale();
    nlfm::WindowSpec rect = nlfm::default_window(nlfm::WindowKind::Kaiser);
    rect.beta = 0.0;
    const auto gd = nlfm::group_delay_from_psd(target_for(rect, params));

    const double T = params.pulse_width_T;
    CHECK(gd.t_of_f.front() == -T / 2);  // endpoints exact by construction
    CHECK(gd.t_of_f.back() == T / 2);

    // Flat PSD: t(f) is proportional to f across the in-band grid.
    const double B_grid = gd.freq.back() - gd.freq.front();
    for (size_t i = 0; i < gd.freq.size(); i += 100) {
        const double expected = T * (gd.freq[i] - gd.freq.front()) / B_grid - T / 2;
        CHECK(gd.t_of_f[i] == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("symmetric PSD crosses zero delay at zero frequency") {
    const auto params = paper_scale();
    const auto gd = nlfm::group_delay_from_psd(
        target_for(nlfm::default_window(nlfm::WindowKind::Taylor), params));
    for (size_t i = 0; i < gd.freq.size(); ++i) {
        if (gd.freq[i] == 0.0) {
            CHECK(std::abs(gd.t_of_f[i]) < 1e-12 * params.pulse_width_T);
            return;
        }
    }
    FAIL("zero-frequency bin not found");
}

TEST_CASE("group delay through a Kaiser beta 6 PSD matches the integral oracle") {
    // Reference: cumulative fraction of the continuum Kaiser(beta=6) power
    // below f = B/4 is 0.903425675496134 (high-resolution trapezoid). The
    // grid realization may differ by the sampling of the shape, well inside
    // 2e-4 of T.
    const auto params = paper_scale();
    nlfm::WindowSpec spec = nlfm::default_window(nlfm::WindowKind::Kaiser);
    spec.beta = 6.0;
    const auto gd = nlfm::group_delay_from_psd(target_for(spec, params));

    const double T = params.pulse_width_T;
    const double t_at_quarter = lerp_at(gd.freq, gd.t_of_f, 25e6);
    const double expected = (0.903425675496134 - 0.5) * T;
    CHECK(std::abs(t_at_quarter - expected) < 2e-4 * T);
}

TEST_CASE("group delay inversion") {
    SUBCASE("linear map inverts to the linear sweep") {
        const GroupDelay gd{{-2.0, -1.0, 0.0, 1.0, 2.0},
                            {-0.5, -0.25, 0.0, 0.25, 0.5}};
        const std::vector<double> t = {-0.5, -0.375, 0.0, 0.5};
        const auto f = nlfm::invert_group_delay(gd, t);
        CHECK(f[0] == doctest::Approx(-2.0));
        CHECK(f[1] == doctest::Approx(-1.5));
        CHECK(f[2] == doctest::Approx(0.0));
        CHECK(f[3] == doctest::Approx(2.0));
    }
    SUBCASE("query on a flat run takes the run's lowest frequency") {
        const GroupDelay gd{{0.0, 1.0, 2.0, 3.0, 4.0},
                            {0.0, 1.0, 1.0, 1.0, 2.0}};
        const auto f = nlfm::invert_group_delay(gd, {0.5, 1.0, 1.5});
        CHECK(f[0] == doctest::Approx(0.5));
        CHECK(f[1] == 1.0);  // exact hit resolves to the left end of the run
        CHECK(f[2] == doctest::Approx(3.5));
    }
    SUBCASE("queries outside the range clamp to the end frequencies") {
        const GroupDelay gd{{-1.0, 1.0}, {-0.5, 0.5}};
        const auto f = nlfm::invert_group_delay(gd, {-9.0, 9.0});
        CHECK(f[0] == -1.0);
        CHECK(f[1] == 1.0);
    }
    SUBCASE("decreasing delay is rejected") {
        const GroupDelay gd{{0.0, 1.0, 2.0}, {0.0, 0.5, 0.4}};
        CHECK_THROWS_AS(nlfm::invert_group_delay(gd, {0.1}),
                        nlfm::degenerate_input);
    }
}

TEST_CASE("inversion undoes the group delay on a strictly positive PSD") {
    const auto params = paper_scale();
    const auto target =
        target_for(nlfm::default_window(nlfm::WindowKind::Kaiser), params);
    const auto gd = nlfm::group_delay_from_psd(target);
    const auto times = nlfm::sample_times(params);
    const auto f = nlfm::invert_group_delay(gd, times);

    const double T = params.pulse_width_T;
    const int N = params.num_samples_N;
    double worst = 0.0;
    for (int n = 0; n < N; ++n) {
        const double t_back = lerp_at(gd.freq, gd.t_of_f, f[n]);
        worst = std::max(worst, std::abs(t_back - times[n]));
    }
    CHECK(worst <= T / N);
}

TEST_CASE("phase integration") {
    const auto params = nlfm::make_design_params(1.0, 4.0, 16.0);
    const int N = params.num_samples_N;

    SUBCASE("zero frequency gives zero phase") {
        const auto law =
            nlfm::phase_from_frequency(std::vector<double>(N, 0.0), params);
        for (double p : law.phase_phi) CHECK(p == 0.0);
    }
    SUBCASE("constant frequency gives a centered linear ramp") {
        const double f0 = 1.5;
        const auto law =
            nlfm::phase_from_frequency(std::vector<double>(N, f0), params);
        const double tc = law.time_grid[N / 2];
        for (int n = 0; n < N; ++n) {
            const double want = 2.0 * kPi * f0 * (law.time_grid[n] - tc);
            CHECK(law.phase_phi[n] == doctest::Approx(want).epsilon(1e-12));
        }
        CHECK(law.phase_phi[N / 2] == 0.0);
    }
    SUBCASE("linear frequency gives the quadratic sweep phase") {
        const auto big = paper_scale();
        const double B = big.bandwidth_B, T = big.pulse_width_T;
        const auto times = nlfm::sample_times(big);
        std::vector<double> ramp(big.num_samples_N);
        for (size_t n = 0; n < ramp.size(); ++n) ramp[n] = (B / T) * times[n];
        const auto law = nlfm::phase_from_frequency(ramp, big);
        const double tc = times[big.num_samples_N / 2];
        double worst = 0.0;
        for (size_t n = 0; n < ramp.size(); ++n) {
            const double want = kPi * (B / T) * (times[n] * times[n] - tc * tc);
            worst = std::max(worst, std::abs(law.phase_phi[n] - want));
        }
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("initial waveform is unit modulus with the law's phase") {
    const auto params = nlfm::make_design_params(1.0, 4.0, 16.0);
    std::vector<double> f(params.num_samples_N);
    for (size_t n = 0; n < f.size(); ++n) f[n] = 0.3 * static_cast<double>(n);
    const auto law = nlfm::phase_from_frequency(f, params);
    const auto x = nlfm::initial_waveform(law);
    for (size_t n = 0; n < x.size(); ++n) {
        CHECK(std::abs(std::abs(x[n]) - 1.0) <= 1e-15);
        const double wrapped_diff =
            std::remainder(nlfm::phase(x[n]) - law.phase_phi[n], 2.0 * kPi);
        CHECK(std::abs(wrapped_diff) < 1e-12);
    }
}

TEST_CASE("initial spectral phase small cases") {
    SUBCASE("single flat sample") {
        // One sample is below the design minimum the factory enforces, but
        // the transform contract itself is well-defined down to N = 1.
        const DesignParams params{1.0, 1.0, 1.0, 4, 1};
        nlfm::PhaseLaw law{{0.0}, {0.0}, {0.0}};
        const auto theta = nlfm::initial_spectral_phase(law, params);
        REQUIRE(theta.size() == 4);
        for (double th : theta) CHECK(std::abs(th) < 1e-12);
    }
    SUBCASE("two flat samples use the zero-phase tie-break at the null") {
        const auto params = nlfm::make_design_params(1.0, 1.0, 2.0, 2);
        CHECK(params.num_samples_N == 2);
        nlfm::PhaseLaw law{{-0.5, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
        const auto theta = nlfm::initial_spectral_phase(law, params);
        CHECK(theta[0] == 0.0);
        CHECK(theta[1] == 0.0);  // transform value is 0; phase(0) = 0
    }
    SUBCASE("linear sweep matches the direct-sum transform") {
        const auto params = nlfm::make_design_params(1.0, 32.0, 64.0, 128);
        const auto times = nlfm::sample_times(params);
        std::vector<double> ramp(params.num_samples_N);
        for (size_t n = 0; n < ramp.size(); ++n) ramp[n] = 32.0 * times[n];
        const auto law = nlfm::phase_from_frequency(ramp, params);
        const auto theta = nlfm::initial_spectral_phase(law, params);

        const auto X = oracle::forward_direct(nlfm::initial_waveform(law), 128);
        for (int k = 0; k < 128; ++k) {
            const double diff =
                std::remainder(theta[k] - nlfm::phase(X[k]), 2.0 * kPi);
            CHECK(std::abs(diff) < 1e-9);
        }
    }
}

TEST_CASE("phase law invariants hold for the default windows") {
    const auto params = paper_scale();
    const double B = params.bandwidth_B;
    for (const auto kind :
         {nlfm::WindowKind::RaisedCosine, nlfm::WindowKind::Taylor,
          nlfm::WindowKind::Chebyshev, nlfm::WindowKind::Kaiser}) {
        CAPTURE(nlfm::window_kind_name(kind));
        const auto target = target_for(nlfm::default_window(kind), params);
        const auto gd = nlfm::group_delay_from_psd(target);
        const auto f =
            nlfm::invert_group_delay(gd, nlfm::sample_times(params));
        const auto law = nlfm::phase_from_frequency(f, params);

        for (size_t n = 1; n < law.inst_freq.size(); ++n)
            CHECK(law.inst_freq[n] - law.inst_freq[n - 1] >= -1e-9 * B);
        for (double fn : law.inst_freq) {
            CHECK(fn >= -B / 2 - 1e-6 * B);
            CHECK(fn <= B / 2 + 1e-6 * B);
        }
        CHECK(law.phase_phi[law.phase_phi.size() / 2] == 0.0);
    }
}

TEST_CASE("rectangular PSD drives the pipeline to a linear sweep") {
    const auto params = nlfm::make_design_params(1e-6, 50e6, 250e6);
    nlfm::WindowSpec rect = nlfm::default_window(nlfm::WindowKind::Kaiser);
    rect.beta = 0.0;
    const auto gd = nlfm::group_delay_from_psd(target_for(rect, params));
    const auto times = nlfm::sample_times(params);
    const auto f = nlfm::invert_group_delay(gd, times);

    const auto fit = oracle::fit_line(times, f);
    CHECK(fit.r_squared > 0.999);
    const double nominal = params.bandwidth_B / params.pulse_width_T;
    CHECK(std::abs(fit.slope / nominal - 1.0) < 0.01);
}
