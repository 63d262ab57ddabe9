#pragma once

#include <cmath>
#include <cstdint>

#include "heisgeo/obstacles.hpp"
#include "heisgeo/paths.hpp"

namespace heisgeo {

struct PlanConfig {
    // Perturbation budget as a fraction of d_cc(p,q); connectors are kept
    // under 5*sqrt(2) times the budget so their total stays within 5*d_cc.
    double epsilon_policy = 1.0 / (25.0 * 1.4142135623730951);
    long max_tries = 1000000; // per segment
    uint64_t seed = 0;
    double margin = 0.0; // required clearance margin; 0 picks a tiny positive one
    double tol = 1e-8;   // cc_dist tolerance for internal measurements
};

struct PlanResult {
    BangBangPath path; // perturbed segments with bang-bang connectors
    double total_cc_length = 0.0;
    double clearance_certificate = 0.0; // min certified margin over all segments
    long tries_used = 0;
    bool perturbed = false;
};

// Join p and q in the complement of A: build the four-segment path, perturb
// each segment (preserving its displacement exactly) until it clears A, and
// reconnect consecutive endpoints with short bang-bang connectors. Every
// output segment is certified by segment_clear with strictly positive margin.
PlanResult plan(const HPoint& p, const HPoint& q, const ObstacleSet& A,
                const PlanConfig& cfg = {});

} // namespace heisgeo
