#pragma once

#include <string>
#include <vector>

#include "nlfm/analysis.hpp"
#include "nlfm/pia.hpp"
#include "nlfm/spc.hpp"

namespace nlfm {

// Number of PSD samples drawn from the window before interpolation onto the
// grid. Smooth shapes are insensitive to this; it fixes the resolution with
// which near-discontinuous edges (Chebyshev) reach the target.
inline constexpr int kWindowPoints = 1025;

struct WindowResult {
    WindowSpec window;
    SpectralTarget target;
    PhaseLaw phase_law;
    Waveform spc_waveform;
    Waveform pia_waveform;
    IterationTrace trace;
    AnalysisReport spc_report;
    AnalysisReport pia_report;
    double improvement_db;  // psl(pia) - psl(spc), negative when improved
};

// Full design for one window: PSD -> target -> group-delay initializer ->
// iterative phase refinement -> metrics for both stages.
WindowResult run_window_design(const DesignParams& params,
                               const WindowSpec& window,
                               const StopConfig& stop);

struct SummaryRecord {
    std::string window_kind;
    std::string window_params;  // "name=value" pairs joined with ';'
    double psl_spc_db = 0.0;
    double psl_pia_db = 0.0;
    double improvement_db = 0.0;
    double isl_db = 0.0;        // of the refined waveform
    double mainlobe_width = 0.0;  // samples, of the refined waveform
    int iterations_run = 0;
    std::string stop_reason;
    double final_error_min = 0.0;
};

SummaryRecord summarize(const WindowResult& result);

} // namespace nlfm
