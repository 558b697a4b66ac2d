#pragma once

#include <string>
#include <vector>

#include "nlfm/pipeline.hpp"

namespace nlfm {

// 12-significant-digit shortest form ('%.12g' style), locale-independent.
std::string format_sig12(double v);

std::string waveform_csv(const Waveform& x, const DesignParams& params);
std::string acf_csv(const std::vector<double>& acf_db, double fs);
std::string trace_csv(const IterationTrace& trace);
std::string summary_csv(const SummaryRecord& record);
std::string summary_text(const SummaryRecord& record);
std::string compare_csv(const std::vector<SummaryRecord>& records);
std::string compare_text(const std::vector<SummaryRecord>& records);

void write_file(const std::string& path, const std::string& content);

} // namespace nlfm
