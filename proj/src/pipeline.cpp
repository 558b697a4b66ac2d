#include "nlfm/pipeline.hpp"

#include <string>

#include "nlfm/csvio.hpp"
#include "nlfm/window.hpp"

namespace nlfm {

WindowResult run_window_design(const DesignParams& params,
                               const WindowSpec& window,
                               const StopConfig& stop) {
    WindowResult result;
    result.window = window;

    const std::vector<double> psd = make_window(window, kWindowPoints);
    result.target = build_spectral_target(psd, params);

    const GroupDelay gd = group_delay_from_psd(result.target);
    const std::vector<double> inst_freq =
        invert_group_delay(gd, sample_times(params));
    result.phase_law = phase_from_frequency(inst_freq, params);
    result.spc_waveform.samples = initial_waveform(result.phase_law);

    DftOperator op(params.grid_size_K, params.num_samples_N);
    const cvec X0 = op.forward(result.spc_waveform.samples);
    std::vector<double> theta0(X0.size());
    for (size_t k = 0; k < X0.size(); ++k) theta0[k] = phase(X0[k]);

    PiaResult pia = run_pia(result.target, theta0, op, stop);
    result.pia_waveform = std::move(pia.waveform);
    result.trace = std::move(pia.trace);

    result.spc_report = analyze(result.spc_waveform, params.sample_rate_fs);
    result.pia_report = analyze(result.pia_waveform, params.sample_rate_fs);
    result.improvement_db = result.pia_report.psl_db.value_or(kDbFloor) -
                            result.spc_report.psl_db.value_or(kDbFloor);
    return result;
}

SummaryRecord summarize(const WindowResult& result) {
    SummaryRecord rec;
    rec.window_kind = window_kind_name(result.window.kind);
    switch (result.window.kind) {
        case WindowKind::RaisedCosine:
            rec.window_params = "pedestal=" + format_sig12(result.window.pedestal);
            break;
        case WindowKind::Taylor:
            rec.window_params = "sll_db=" + format_sig12(result.window.sll_db) +
                                ";nbar=" + std::to_string(result.window.nbar);
            break;
        case WindowKind::Chebyshev:
            rec.window_params = "atten_db=" + format_sig12(result.window.atten_db);
            break;
        case WindowKind::Kaiser:
            rec.window_params = "beta=" + format_sig12(result.window.beta);
            break;
    }
    rec.psl_spc_db = result.spc_report.psl_db.value_or(kDbFloor);
    rec.psl_pia_db = result.pia_report.psl_db.value_or(kDbFloor);
    rec.improvement_db = result.improvement_db;
    rec.isl_db = result.pia_report.isl_db.value_or(kDbFloor);
    rec.mainlobe_width = result.pia_report.mainlobe_width_samples;
    rec.iterations_run = static_cast<int>(result.trace.records.size());
    rec.stop_reason = stop_reason_name(result.trace.stop_reason);
    rec.final_error_min =
        result.trace.records.empty() ? 0.0 : result.trace.records.back().error_min;
    return rec;
}

} // namespace nlfm
