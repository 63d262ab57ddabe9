#pragma once

#include <stdexcept>
#include <string>

namespace heisgeo {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values (r <= 0 dilations, alpha outside [0,3], ...).
struct invalid_parameter : error {
    using error::error;
};

// A scalar solve or estimator did not converge; message carries diagnostics.
struct numeric_failure : error {
    using error::error;
};

// Perturbation budget exhausted while planning; carries the blocking segment.
struct planning_failure : error {
    planning_failure(const std::string& msg, int segment)
        : error(msg), segment_index(segment) {}
    int segment_index;
};

// Maze layout violating disjointness or containment; message names the pair.
struct invalid_layout : error {
    using error::error;
};

// Too few occupied cells at the coarsest scale to fit a dimension.
struct insufficient_data : error {
    using error::error;
};

} // namespace heisgeo
