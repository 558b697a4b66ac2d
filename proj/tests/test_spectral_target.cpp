#include <doctest.h>

#include <cmath>
#include <vector>

#include "nlfm/spectral_target.hpp"
#include "nlfm/window.hpp"

using nlfm::DesignParams;

namespace {

DesignParams small_params(int K, double B, double fs, double T) {
    return nlfm::make_design_params(T, B, fs, K);
}

} // namespace

TEST_CASE("bin frequencies follow the two-sided baseband convention") {
    const double fs = 8.0;
    const int K = 8;
    const double expected[8] = {0, 1, 2, 3, -4, -3, -2, -1};
    for (int k = 0; k < K; ++k)
        CHECK(nlfm::bin_frequency(k, K, fs) == doctest::Approx(expected[k]));
}

TEST_CASE("band membership includes both band edges") {
    // K = 8, B = fs/2: |f_k| <= B/2 holds exactly for bins 0,1,2,6,7 --
    // bin 2 sits exactly on +B/2 and stays in, bin 4 (the -fs/2 bin) is out.
    const double fs = 8.0;
    const auto params = small_params(8, 4.0, fs, 1.0);
    const std::vector<double> psd(33, 1.0);
    const auto target = nlfm::build_spectral_target(psd, params);

    CHECK(target.band_bins == std::vector<int>{0, 1, 2, 6, 7});
    for (int k = 0; k < 8; ++k) {
        const bool in_band =
            std::abs(nlfm::bin_frequency(k, 8, fs)) <= params.bandwidth_B / 2;
        CHECK(target.magnitude[k] == (in_band ? 1.0 : 0.0));
    }
}

TEST_CASE("magnitude is the square root of the interpolated PSD") {
    // PSD ramps 0..4 across the band; the bin at +B/4 sits three quarters of
    // the way in, so PSD there lerps to 3 and the magnitude to sqrt(3)/2
    // after peak normalization (peak sqrt(4) = 2).
    const auto params = small_params(8, 4.0, 8.0, 1.0);
    const std::vector<double> psd = {0.0, 1.0, 2.0, 3.0, 4.0};
    const auto target = nlfm::build_spectral_target(psd, params);

    CHECK(target.magnitude[2] == doctest::Approx(1.0));          // f = +B/2
    CHECK(target.magnitude[1] == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(target.magnitude[0] == doctest::Approx(std::sqrt(2.0) / 2.0));
    CHECK(target.magnitude[6] == doctest::Approx(0.0));          // f = -B/2
}

TEST_CASE("peak normalization divides by the largest magnitude") {
    const auto params = small_params(16, 4.0, 8.0, 1.0);
    const std::vector<double> psd(9, 4.0);  // peak 4 -> magnitude peak 2 -> 1
    const auto target = nlfm::build_spectral_target(psd, params);
    double peak = 0.0;
    for (double m : target.magnitude) peak = std::max(peak, m);
    CHECK(peak == 1.0);
}

TEST_CASE("out-of-band bins are exactly zero") {
    const auto params = small_params(64, 10.0, 40.0, 1.0);
    const auto psd = nlfm::make_window(
        nlfm::default_window(nlfm::WindowKind::Kaiser), 129);
    const auto target = nlfm::build_spectral_target(psd, params);

    size_t in_band = 0;
    for (int k = 0; k < 64; ++k) {
        const bool in =
            std::abs(nlfm::bin_frequency(k, 64, 40.0)) <= 5.0;
        if (in) {
            ++in_band;
        } else {
            CHECK(target.magnitude[k] == 0.0);
        }
    }
    CHECK(target.band_bins.size() == in_band);
}

TEST_CASE("symmetric window gives a frequency-symmetric target") {
    const auto params = small_params(128, 10.0, 40.0, 1.0);
    const auto psd = nlfm::make_window(
        nlfm::default_window(nlfm::WindowKind::Taylor), 257);
    const auto target = nlfm::build_spectral_target(psd, params);
    for (int k = 1; k < 128; ++k) {
        CHECK(target.magnitude[k] ==
              doctest::Approx(target.magnitude[128 - k]).epsilon(1e-12));
    }
}

TEST_CASE("all-zero window is rejected as degenerate") {
    const auto params = small_params(8, 4.0, 8.0, 1.0);
    const std::vector<double> psd(17, 0.0);
    CHECK_THROWS_AS(nlfm::build_spectral_target(psd, params),
                    nlfm::degenerate_input);
}
