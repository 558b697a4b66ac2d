#include "nlfm/csvio.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace nlfm {

std::string format_sig12(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v,
                             std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

namespace {

// Sidelobe levels at the floor mean "no sidelobes found"; exports say so
// instead of printing the placeholder number.
std::string level_field(double db) {
    if (db <= kDbFloor) return "< -300 dB";
    return format_sig12(db);
}

} // namespace

std::string waveform_csv(const Waveform& x, const DesignParams& params) {
    std::string out = "n,t_us,i,q\n";
    const double half_T_us = 0.5 * params.pulse_width_T * 1e6;
    const double fs_mhz = params.sample_rate_fs * 1e-6;
    for (size_t n = 0; n < x.samples.size(); ++n) {
        const double t_us = -half_T_us + static_cast<double>(n) / fs_mhz;
        out += std::to_string(n);
        out += ',';
        out += format_sig12(t_us);
        out += ',';
        out += format_sig12(x.amplitude_A * x.samples[n].real());
        out += ',';
        out += format_sig12(x.amplitude_A * x.samples[n].imag());
        out += '\n';
    }
    return out;
}

std::string acf_csv(const std::vector<double>& acf_db, double fs) {
    std::string out = "lag,lag_us,acf_db\n";
    const double fs_mhz = fs * 1e-6;
    for (size_t lag = 0; lag < acf_db.size(); ++lag) {
        out += std::to_string(lag);
        out += ',';
        out += format_sig12(static_cast<double>(lag) / fs_mhz);
        out += ',';
        out += format_sig12(acf_db[lag]);
        out += '\n';
    }
    return out;
}

std::string trace_csv(const IterationTrace& trace) {
    std::string out = "iter,error_min,delta_error\n";
    for (const auto& rec : trace.records) {
        out += std::to_string(rec.r);
        out += ',';
        out += format_sig12(rec.error_min);
        out += ',';
        out += format_sig12(rec.delta_error);
        out += '\n';
    }
    return out;
}

namespace {

const char* kSummaryHeader =
    "window_kind,window_params,psl_spc_db,psl_pia_db,improvement_db,isl_db,"
    "mainlobe_width_samples,iterations_run,stop_reason,final_error_min\n";

std::string summary_row(const SummaryRecord& r) {
    std::string out;
    out += r.window_kind;
    out += ',';
    out += r.window_params;
    out += ',';
    out += level_field(r.psl_spc_db);
    out += ',';
    out += level_field(r.psl_pia_db);
    out += ',';
    out += format_sig12(r.improvement_db);
    out += ',';
    out += level_field(r.isl_db);
    out += ',';
    out += format_sig12(r.mainlobe_width);
    out += ',';
    out += std::to_string(r.iterations_run);
    out += ',';
    out += r.stop_reason;
    out += ',';
    out += format_sig12(r.final_error_min);
    out += '\n';
    return out;
}

} // namespace

std::string summary_csv(const SummaryRecord& record) {
    return kSummaryHeader + summary_row(record);
}

std::string summary_text(const SummaryRecord& r) {
    std::string out;
    out += "window_kind: " + r.window_kind + '\n';
    out += "window_params: " + r.window_params + '\n';
    out += "psl_spc_db: " + level_field(r.psl_spc_db) + '\n';
    out += "psl_pia_db: " + level_field(r.psl_pia_db) + '\n';
    out += "improvement_db: " + format_sig12(r.improvement_db) + '\n';
    out += "isl_db: " + level_field(r.isl_db) + '\n';
    out += "mainlobe_width_samples: " + format_sig12(r.mainlobe_width) + '\n';
    out += "iterations_run: " + std::to_string(r.iterations_run) + '\n';
    out += "stop_reason: " + r.stop_reason + '\n';
    out += "final_error_min: " + format_sig12(r.final_error_min) + '\n';
    return out;
}

std::string compare_csv(const std::vector<SummaryRecord>& records) {
    std::string out = kSummaryHeader;
    double sum = 0.0;
    for (const auto& r : records) {
        out += summary_row(r);
        sum += r.improvement_db;
    }
    const double avg = records.empty() ? 0.0 : sum / records.size();
    out += "average,,,,";
    out += format_sig12(avg);
    out += ",,,,,\n";
    return out;
}

std::string compare_text(const std::vector<SummaryRecord>& records) {
    std::string out;
    out += "window          psl_spc_db   psl_pia_db   improvement_db   iterations   stop_reason\n";
    double sum = 0.0;
    char line[160];
    for (const auto& r : records) {
        std::snprintf(line, sizeof(line), "%-14s %12.2f %12.2f %16.2f %12d   %s\n",
                      r.window_kind.c_str(), r.psl_spc_db, r.psl_pia_db,
                      r.improvement_db, r.iterations_run, r.stop_reason.c_str());
        out += line;
        sum += r.improvement_db;
    }
    const double avg = records.empty() ? 0.0 : sum / records.size();
    std::snprintf(line, sizeof(line), "average improvement: %.2f dB\n", avg);
    out += line;
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    if (p.has_parent_path())
        std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace nlfm
