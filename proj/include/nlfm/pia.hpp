#pragma once

#include <vector>

#include "nlfm/dft.hpp"
#include "nlfm/spectral_target.hpp"

namespace nlfm {

struct Waveform {
    cvec samples;             // unit modulus
    double amplitude_A = 1.0; // scales exported samples only
};

// Spectral measurement y_m(k) = magnitude(k) * exp(j*theta(k)). The
// magnitude array is stored as-is and never recomputed from the complex
// values, so iteration preserves it bit for bit.
struct MeasurementVector {
    std::vector<double> magnitude;
    std::vector<double> theta;
    cvec values;
};

MeasurementVector make_measurement(std::vector<double> magnitude,
                                   std::vector<double> theta);

enum class StopReason { DeltaNonNegative, MaxIterations, Converged };

const char* stop_reason_name(StopReason reason);

struct IterationRecord {
    int r;
    double error_min;
    double delta_error;  // error_min(r) - error_min(r-1); 0 for r = 1
};

struct IterationTrace {
    std::vector<IterationRecord> records;
    StopReason stop_reason = StopReason::MaxIterations;
};

struct IterateResult {
    cvec x_hat;                 // unit-modulus time samples
    std::vector<double> theta;  // spectral phase of the transform of x_hat
    MeasurementVector y_next;
    double error_min;
};

// One refinement step: project the adjoint image onto constant modulus,
// transform back, keep the target magnitude with the new phase.
IterateResult iterate_once(const MeasurementVector& y_prev,
                           const SpectralTarget& target, DftOperator& op);

struct PiaResult {
    Waveform waveform;
    IterationTrace trace;
    std::vector<double> theta_final;
};

// Iterates from theta0 until the per-step error stops improving (relative
// to the first-iteration error), rolling the waveform back one step when
// the final step made the error grow, or until max_iterations.
PiaResult run_pia(const SpectralTarget& target,
                  const std::vector<double>& theta0, DftOperator& op,
                  const StopConfig& stop);

// || y_m - forward(x) ||^2.
double error_functional(const MeasurementVector& y_m, const cvec& x,
                        DftOperator& op);

} // namespace nlfm
