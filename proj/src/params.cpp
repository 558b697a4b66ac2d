#include "nlfm/params.hpp"

#include <cmath>

namespace nlfm {

DesignParams make_design_params(double T, double B, double fs, int K) {
    if (!(T > 0.0)) throw invalid_parameter("pulse width must be positive");
    if (!(B > 0.0)) throw invalid_parameter("bandwidth must be positive");
    if (!(fs >= B))
        throw invalid_parameter("sample rate must be at least the bandwidth");
    int N = static_cast<int>(std::llround(T * fs));
    if (N < 2) throw invalid_parameter("pulse must span at least 2 samples");
    if (K == 0) {
        K = 1;
        while (K < 2 * N) K *= 2;
    }
    if (K < N)
        throw invalid_parameter("grid size K must be at least the sample count N");
    return DesignParams{T, B, fs, K, N};
}

WindowSpec default_window(WindowKind kind) {
    WindowSpec spec;  // field initializers carry the calibrated defaults
    spec.kind = kind;
    return spec;
}

const char* window_kind_name(WindowKind kind) {
    switch (kind) {
        case WindowKind::RaisedCosine: return "raised-cosine";
        case WindowKind::Taylor: return "taylor";
        case WindowKind::Chebyshev: return "chebyshev";
        case WindowKind::Kaiser: return "kaiser";
    }
    return "unknown";
}

WindowKind parse_window_kind(const std::string& name) {
    if (name == "raised-cosine") return WindowKind::RaisedCosine;
    if (name == "taylor") return WindowKind::Taylor;
    if (name == "chebyshev") return WindowKind::Chebyshev;
    if (name == "kaiser") return WindowKind::Kaiser;
    throw invalid_parameter("unknown window kind: " + name);
}

void validate(const StopConfig& stop) {
    if (stop.max_iterations < 1)
        throw invalid_parameter("max_iterations must be at least 1");
    if (stop.rel_tolerance < 0.0)
        throw invalid_parameter("rel_tolerance must be nonnegative");
}

} // namespace nlfm
