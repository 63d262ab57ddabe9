#include "heisgeo/planner.hpp"

#include <algorithm>
#include <random>

#include "heisgeo/metrics.hpp"

namespace heisgeo {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

bool path_clear(const ObstacleSet& A, const BangBangPath& path, double margin) {
    for (const AxisSegment& s : path.segments)
        if (!segment_clear(A, s, margin)) return false;
    return true;
}

// Largest margin the whole path clears, by bisection.
double certify(const ObstacleSet& A, const BangBangPath& path, double cap) {
    if (!path_clear(A, path, 0.0)) return 0.0;
    if (path_clear(A, path, cap)) return cap;
    double lo = 0.0, hi = cap;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (path_clear(A, path, mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace

PlanResult plan(const HPoint& p, const HPoint& q, const ObstacleSet& A, const PlanConfig& cfg) {
    if (A.contains(p)) throw invalid_parameter("plan: p lies in the obstacle set");
    if (A.contains(q)) throw invalid_parameter("plan: q lies in the obstacle set");
    if (p.x == q.x && p.y == q.y && p.t == q.t)
        throw invalid_parameter("plan: p and q must differ");
    if (!(cfg.epsilon_policy > 0.0 && cfg.epsilon_policy < 1.0))
        throw invalid_parameter("plan: epsilon_policy must lie in (0,1)");
    if (cfg.max_tries < 1) throw invalid_parameter("plan: max_tries must be >= 1");

    const double dcc = cc_dist(p, q, cfg.tol);
    const double margin_req = cfg.margin > 0.0 ? cfg.margin : 1e-9 * std::max(1.0, dcc);

    const BangBangPath base = bang_bang(p, q);

    PlanResult out;
    if (path_clear(A, base, margin_req)) {
        out.path = base;
        out.total_cc_length = cc_length(base);
        out.clearance_certificate = certify(A, base, 1.0 + dcc);
        return out;
    }

    const double eps = cfg.epsilon_policy * dcc;
    const double conn_scale = 5.0 * kSqrt2 * eps; // preferred connector length scale
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    // Final gap must land inside the certified clear ball around q.
    const double delta = std::min(0.5 * clear_radius(A, q, dcc), dcc);

    long tries_total = 0;
    const long try_budget = cfg.max_tries;
    int blocking_segment = 0;

    for (int round = 0; tries_total < try_budget; ++round) {
        BangBangPath result;
        HPoint cur = p;
        bool perturbed = false;
        bool failed = false;

        const double round_scale = std::pow(0.5, 0.25 * round);
        // Hard total budget for all connectors; a non-final connector may take
        // at most half the remainder, so the sum can never overrun.
        double budget_left = 4.9 * dcc;

        for (int i = 0; i < 4 && !failed; ++i) {
            const AxisSegment nominal = base.segments[static_cast<size_t>(i)];
            bool placed = false;

            const long seg_budget = std::max<long>(64, try_budget / 256);
            for (long attempt = 0; attempt < seg_budget && tries_total < try_budget;
                 ++attempt) {
                ++tries_total;
                // offsets sweep decades below the preferred epsilon scale and
                // escalate toward the budget cap when the scale is too small
                // to escape the obstacle cross-section
                const double escalate = std::exp2(static_cast<double>(attempt / 256));
                const double cap =
                    std::min(conn_scale * escalate * round_scale, 0.5 * budget_left);
                const double top_radius = 0.45 * cap;

                HPoint cand = cur;
                if (attempt > 0) {
                    const double r = top_radius * std::pow(10.0, -3.0 * u01(rng));
                    const double xi = r * uni(rng);
                    const double eta = r * uni(rng);
                    const double tau = r * r * uni(rng);
                    cand = mul(cur, {xi, eta, tau});
                }

                BangBangPath connector;
                if (attempt > 0) {
                    connector = bang_bang(cur, cand);
                    if (cc_length(connector) >= cap) continue;
                    if (!path_clear(A, connector, margin_req)) continue;
                    cand = connector.end(); // keep the chain exactly contiguous
                }

                AxisSegment seg{nominal.axis, cand, nominal.displacement};
                if (!segment_clear(A, seg, margin_req)) continue;

                BangBangPath closing;
                if (i == 3) {
                    // Reconnection to q: inside the clear ball around q, within
                    // the leftover budget, and clear of the obstacles.
                    const HPoint end4 = seg.end();
                    if (cc_dist(end4, q, cfg.tol) >= delta) continue;
                    closing = bang_bang(end4, q);
                    if (cc_length(closing) >= budget_left - cc_length(connector)) continue;
                    if (!path_clear(A, closing, margin_req)) continue;
                }

                if (attempt > 0) {
                    result.segments.insert(result.segments.end(), connector.segments.begin(),
                                           connector.segments.end());
                    budget_left -= cc_length(connector);
                    perturbed = true;
                }
                result.segments.push_back(seg);
                cur = seg.end();
                if (i == 3) {
                    result.segments.insert(result.segments.end(), closing.segments.begin(),
                                           closing.segments.end());
                    budget_left -= cc_length(closing);
                    cur = closing.end();
                }
                placed = true;
                break;
            }
            if (!placed) {
                blocking_segment = i;
                failed = true;
            }
        }

        if (!failed) {
            out.path = std::move(result);
            out.total_cc_length = cc_length(out.path);
            out.clearance_certificate = certify(A, out.path, 1.0 + dcc);
            out.tries_used = tries_total;
            out.perturbed = perturbed;
            return out;
        }
    }

    throw planning_failure("plan: perturbation budget exhausted on segment " +
                               std::to_string(blocking_segment + 1),
                           blocking_segment);
}

} // namespace heisgeo
