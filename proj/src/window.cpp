#include "nlfm/window.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace nlfm {

namespace {

// Normalized position across the band: xi(i) spans [-1/2, +1/2] inclusive.
inline double grid_xi(int i, int M) {
    return (i - (M - 1) / 2.0) / (M - 1);
}

std::vector<double> raised_cosine(int M, double h) {
    if (h < 0.0 || h > 1.0)
        throw invalid_parameter("raised-cosine pedestal must lie in [0, 1]");
    std::vector<double> w(M);
    for (int i = 0; i < M; ++i) {
        double c = std::cos(M_PI * grid_xi(i, M));
        w[i] = h + (1.0 - h) * c * c;
    }
    return w;
}

std::vector<double> kaiser(int M, double beta) {
    if (beta < 0.0)
        throw invalid_parameter("kaiser beta must be nonnegative");
    double i0b = std::cyl_bessel_i(0.0, beta);
    std::vector<double> w(M);
    for (int i = 0; i < M; ++i) {
        double xi = grid_xi(i, M);
        double arg = 1.0 - (2.0 * xi) * (2.0 * xi);
        arg = std::clamp(arg, 0.0, 1.0);
        w[i] = std::cyl_bessel_i(0.0, beta * std::sqrt(arg)) / i0b;
    }
    return w;
}

std::vector<double> taylor(int M, double sll_db, int nbar) {
    if (sll_db >= 0.0)
        throw invalid_parameter("taylor sidelobe level must be negative dB");
    if (nbar < 1)
        throw invalid_parameter("taylor nbar must be at least 1");
    double A = std::acosh(std::pow(10.0, -sll_db / 20.0)) / M_PI;
    double sigma2 =
        nbar * nbar / (A * A + (nbar - 0.5) * (nbar - 0.5));
    std::vector<double> w(M, 1.0);
    for (int m = 1; m < nbar; ++m) {
        double num = 1.0;
        for (int n = 1; n < nbar; ++n)
            num *= 1.0 - m * m / (sigma2 * (A * A + (n - 0.5) * (n - 0.5)));
        double den = 1.0;
        for (int n = 1; n < nbar; ++n)
            if (n != m) den *= 1.0 - double(m * m) / double(n * n);
        double Fm = ((m % 2 == 1) ? 0.5 : -0.5) * num / den;
        for (int i = 0; i < M; ++i)
            w[i] += 2.0 * Fm * std::cos(2.0 * M_PI * m * grid_xi(i, M));
    }
    return w;
}

// Chebyshev polynomial of the given order on the whole real line.
double cheb_poly(int order, double x) {
    if (std::abs(x) <= 1.0) return std::cos(order * std::acos(x));
    if (x > 1.0) return std::cosh(order * std::acosh(x));
    double v = std::cosh(order * std::acosh(-x));
    return (order % 2 == 0) ? v : -v;
}

std::vector<double> chebyshev(int M, double atten_db) {
    if (atten_db <= 0.0)
        throw invalid_parameter("chebyshev attenuation must be positive dB");
    if (M < 2) throw invalid_parameter("chebyshev window needs >= 2 points");
    int R = M - 1;
    double r = std::pow(10.0, atten_db / 20.0);
    double beta = std::cosh(std::acosh(r) / R);
    std::vector<double> p(M);
    for (int k = 0; k < M; ++k)
        p[k] = cheb_poly(R, beta * std::cos(M_PI * k / M));
    int half = (M % 2 == 1) ? (M - 1) / 2 : M / 2 - 1;
    std::vector<double> w(M, p[0]);
    for (int i = 0; i < M; ++i) {
        double nu = i - (M - 1) / 2.0;
        for (int k = 1; k <= half; ++k)
            w[i] += 2.0 * p[k] * std::cos(2.0 * M_PI * k * nu / M);
    }
    return w;
}

} // namespace

std::vector<double> make_window(const WindowSpec& spec, int num_points) {
    if (num_points < 2)
        throw invalid_parameter("window needs at least 2 points");
    std::vector<double> w;
    switch (spec.kind) {
        case WindowKind::RaisedCosine:
            w = raised_cosine(num_points, spec.pedestal);
            break;
        case WindowKind::Taylor:
            w = taylor(num_points, spec.sll_db, spec.nbar);
            break;
        case WindowKind::Chebyshev:
            w = chebyshev(num_points, spec.atten_db);
            break;
        case WindowKind::Kaiser:
            w = kaiser(num_points, spec.beta);
            break;
        default:
            throw invalid_parameter("unknown window kind");
    }
    double peak = *std::max_element(w.begin(), w.end());
    if (!(peak > 0.0))
        throw invalid_parameter("window parameters produce a non-positive peak");
    for (double& v : w) v /= peak;
    for (double v : w)
        if (v < 0.0)
            throw invalid_parameter(
                "window parameters produce negative PSD samples");
    return w;
}

} // namespace nlfm
