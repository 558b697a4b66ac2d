#pragma once

#include <vector>

#include "nlfm/params.hpp"

namespace nlfm {

// Samples the requested PSD shape at num_points equally spaced frequencies
// across the design band (both band edges included), normalized to peak 1.
std::vector<double> make_window(const WindowSpec& spec, int num_points);

} // namespace nlfm
