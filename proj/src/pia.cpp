#include "nlfm/pia.hpp"

#include <cmath>
#include <utility>

namespace nlfm {

MeasurementVector make_measurement(std::vector<double> magnitude,
                                   std::vector<double> theta) {
    if (magnitude.size() != theta.size())
        throw invalid_parameter("measurement magnitude and phase lengths differ");
    MeasurementVector y;
    y.values.resize(magnitude.size());
    for (size_t k = 0; k < magnitude.size(); ++k) {
        if (!(magnitude[k] >= 0.0))
            throw invalid_parameter("measurement magnitude must be nonnegative");
        y.values[k] = std::polar(magnitude[k], theta[k]);
    }
    y.magnitude = std::move(magnitude);
    y.theta = std::move(theta);
    return y;
}

const char* stop_reason_name(StopReason reason) {
    switch (reason) {
        case StopReason::DeltaNonNegative: return "delta_non_negative";
        case StopReason::MaxIterations: return "max_iterations";
        case StopReason::Converged: return "converged";
    }
    return "unknown";
}

IterateResult iterate_once(const MeasurementVector& y_prev,
                           const SpectralTarget& target, DftOperator& op) {
    const int K = op.grid_size();
    if (static_cast<int>(y_prev.values.size()) != K ||
        static_cast<int>(target.magnitude.size()) != K)
        throw invalid_parameter("measurement and target must live on the K-grid");
    // The iteration contract: the magnitude the measurement carries is the
    // target magnitude, bit for bit.
    if (y_prev.magnitude != target.magnitude)
        throw degenerate_input("measurement magnitude does not match the target");

    IterateResult res;
    res.x_hat = constant_modulus_projection(op.adjoint(y_prev.values));
    const cvec X = op.forward(res.x_hat);

    res.theta.resize(K);
    double err = 0.0;
    for (int k = 0; k < K; ++k) {
        res.theta[k] = phase(X[k]);
        err += std::norm(y_prev.values[k] - X[k]);
    }
    res.error_min = err;
    res.y_next = make_measurement(y_prev.magnitude, res.theta);
    return res;
}

PiaResult run_pia(const SpectralTarget& target,
                  const std::vector<double>& theta0, DftOperator& op,
                  const StopConfig& stop) {
    validate(stop);
    if (static_cast<int>(theta0.size()) != op.grid_size())
        throw invalid_parameter("initial spectral phase must have one entry per grid bin");

    PiaResult out;
    out.trace.stop_reason = StopReason::MaxIterations;

    MeasurementVector y = make_measurement(target.magnitude, theta0);
    double first_error = 0.0;
    double prev_error = 0.0;

    for (int r = 1; r <= stop.max_iterations; ++r) {
        IterateResult step = iterate_once(y, target, op);
        const double delta = (r == 1) ? 0.0 : step.error_min - prev_error;
        out.trace.records.push_back({r, step.error_min, delta});
        if (r == 1) first_error = step.error_min;

        if (r >= 2 && delta >= -stop.rel_tolerance * first_error) {
            if (delta >= 0.0) {
                // This step made the error grow (or stall): discard it and
                // keep the waveform from iteration r-1.
                out.trace.stop_reason = StopReason::DeltaNonNegative;
            } else {
                // Still improving, but by less than the tolerance: keep it.
                out.waveform.samples = std::move(step.x_hat);
                out.theta_final = std::move(step.theta);
                out.trace.stop_reason = StopReason::Converged;
            }
            return out;
        }

        out.waveform.samples = std::move(step.x_hat);
        out.theta_final = std::move(step.theta);
        y = std::move(step.y_next);
        prev_error = step.error_min;
    }
    return out;
}

double error_functional(const MeasurementVector& y_m, const cvec& x,
                        DftOperator& op) {
    if (static_cast<int>(y_m.values.size()) != op.grid_size())
        throw invalid_parameter("measurement must live on the K-grid");
    const cvec X = op.forward(x);
    double err = 0.0;
    for (size_t k = 0; k < X.size(); ++k)
        err += std::norm(y_m.values[k] - X[k]);
    return err;
}

} // namespace nlfm
