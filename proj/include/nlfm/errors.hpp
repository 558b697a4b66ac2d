#pragma once

#include <stdexcept>
#include <string>

namespace nlfm {

// Parameter-domain problems: out-of-range window parameters, K < N,
// max_iterations < 1, malformed configuration. The CLI maps these to the
// usage exit code.
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Data problems discovered while computing: all-zero windows, degenerate
// targets, magnitude mismatches, non-monotone group delay. The CLI maps
// these to the data-error exit code.
struct degenerate_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace nlfm
