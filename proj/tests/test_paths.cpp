#include <doctest.h>

#include <cmath>
#include <random>

#include "heisgeo/metrics.hpp"
#include "heisgeo/paths.hpp"

using namespace heisgeo;

namespace {

std::mt19937_64 rng(4242);

HPoint random_point(double box, double tbox) {
    std::uniform_real_distribution<double> u(-box, box), ut(-tbox, tbox);
    return {u(rng), u(rng), ut(rng)};
}

// endpoint error: coordinate distance, normalized by the pair's gauge scale
// (the gauge metric itself turns ulp-level t-rounding into ~1e-7 via the
// fourth root, so it is not a usable exactness measure in doubles)
double endpoint_error(const HPoint& got, const HPoint& want) {
    return std::sqrt((got.x - want.x) * (got.x - want.x) +
                     (got.y - want.y) * (got.y - want.y) +
                     (got.t - want.t) * (got.t - want.t));
}

} // namespace

TEST_CASE("bang-bang: degenerate branch t = -2xy") {
    const BangBangParams P = bang_bang_params({1, 1, -2});
    CHECK(P.degenerate);
    CHECK(P.a == 1.0);
    CHECK(P.b == 1.0);
    CHECK(P.c == 0.0);
    CHECK(P.d == 0.0);

    const BangBangPath path = bang_bang({0, 0, 0}, {1, 1, -2});
    CHECK(cc_length(path) == 2.0);
    const HPoint w1 = path.segments[0].end();
    CHECK(w1.x == 1.0);
    CHECK(w1.y == 0.0);
    CHECK(w1.t == 0.0);
    const HPoint w2 = path.segments[1].end();
    CHECK(w2.x == 1.0);
    CHECK(w2.y == 1.0);
    CHECK(w2.t == -2.0);
    CHECK(koranyi_dist(path.end(), {1, 1, -2}) == 0.0);
}

TEST_CASE("bang-bang: vertical target (0,0,1)") {
    const BangBangParams P = bang_bang_params({0, 0, 1});
    const double b = std::sqrt(0.5);
    CHECK(P.b == doctest::Approx(b).epsilon(1e-15));
    CHECK(P.a == doctest::Approx(-0.3535533905932738).epsilon(1e-15));
    CHECK(P.c == doctest::Approx(-0.3535533905932738).epsilon(1e-15));
    CHECK(P.d == doctest::Approx(0.7071067811865476).epsilon(1e-15));

    const BangBangPath path = bang_bang({0, 0, 0}, {0, 0, 1});
    CHECK(cc_length(path) == doctest::Approx(2.1213203435596426).epsilon(1e-15));

    // waypoints from the construction
    const HPoint p2 = path.segments[1].end();
    CHECK(p2.x == doctest::Approx(-0.3535533905932738));
    CHECK(p2.y == doctest::Approx(0.7071067811865476));
    CHECK(p2.t == doctest::Approx(0.5));
    const HPoint p3 = path.segments[2].end();
    CHECK(p3.x == doctest::Approx(0.0));
    CHECK(p3.t == doctest::Approx(1.0));
    CHECK(koranyi_dist(path.end(), {0, 0, 1}) <= 1e-15);

    // within the lemma budget against the exact vertical distance
    CHECK(cc_length(path) <= 5 * std::sqrt(2.0) * std::sqrt(M_PI));
}

TEST_CASE("bang-bang: mixed target (1,0,1)") {
    const BangBangParams P = bang_bang_params({1, 0, 1});
    CHECK(P.a == doctest::Approx(0.6464466094067263).epsilon(1e-15));
    CHECK(P.b == doctest::Approx(0.7071067811865476).epsilon(1e-15));
    CHECK(P.c == doctest::Approx(-0.3535533905932737).epsilon(1e-14));
    CHECK(P.d == doctest::Approx(0.7071067811865476).epsilon(1e-15));
    const BangBangPath path = bang_bang({0, 0, 0}, {1, 0, 1});
    CHECK(cc_length(path) == doctest::Approx(2.414213562373095).epsilon(1e-15));
    CHECK(koranyi_dist(path.end(), {1, 0, 1}) <= 1e-15);
}

TEST_CASE("bang-bang: p = q gives an all-zero path") {
    const BangBangPath path = bang_bang({2, 3, -1}, {2, 3, -1});
    CHECK(path.segments.size() == 4);
    CHECK(cc_length(path) == 0.0);
    CHECK(koranyi_dist(path.end(), {2, 3, -1}) == 0.0);
}

TEST_CASE("bang-bang: consecutive segments chain bitwise") {
    for (int k = 0; k < 500; ++k) {
        const HPoint p = random_point(10, 100), q = random_point(10, 100);
        const BangBangPath path = bang_bang(p, q);
        REQUIRE(path.segments.size() == 4);
        CHECK(path.segments[0].start.x == p.x);
        CHECK(path.segments[0].start.t == p.t);
        for (int i = 1; i < 4; ++i) {
            const HPoint prev = path.segments[i - 1].end();
            CHECK(prev.x == path.segments[i].start.x);
            CHECK(prev.y == path.segments[i].start.y);
            CHECK(prev.t == path.segments[i].start.t);
        }
    }
}

TEST_CASE("bang-bang: endpoint accuracy and lemma bounds on random pairs") {
    double worst_ratio = 0.0;
    for (int k = 0; k < 20000; ++k) {
        const HPoint p = random_point(10, 100), q = random_point(10, 100);
        const BangBangPath path = bang_bang(p, q);
        const double gauge = koranyi_dist(p, q);
        CHECK(endpoint_error(path.end(), q) <= 1e-9 * std::max(1.0, gauge));

        const HPoint w = mul(inv(p), q);
        const double budget =
            5.0 * (std::fabs(w.x) + std::fabs(w.y) + std::sqrt(std::fabs(w.t)));
        CHECK(cc_length(path) <= budget); // intermediate bound, no tolerance

        if (k % 20 == 0) {
            const double d = cc_dist(p, q, 1e-10);
            if (d > 1e-12) worst_ratio = std::max(worst_ratio, cc_length(path) / d);
        }
    }
    CHECK(worst_ratio <= 5.0 * std::sqrt(2.0) * (1.0 + 1e-6));
    MESSAGE("worst l_cc/d_cc ratio observed: ", worst_ratio);
}

TEST_CASE("bang-bang: dilation equivariance is exact for binary scale factors") {
    for (int k = 0; k < 200; ++k) {
        const HPoint p = random_point(10, 100), q = random_point(10, 100);
        const double r = std::ldexp(1.0, (k % 13) - 6); // 2^-6 .. 2^6
        const BangBangParams P = bang_bang_params(mul(inv(p), q));
        const BangBangParams Pr = bang_bang_params(mul(inv(dilate(r, p)), dilate(r, q)));
        CHECK(Pr.a == r * P.a);
        CHECK(Pr.b == r * P.b);
        CHECK(Pr.c == r * P.c);
        CHECK(Pr.d == r * P.d);
    }
}

TEST_CASE("cc_length") {
    CHECK(cc_length(BangBangPath{}) == 0.0);
    BangBangPath one;
    one.segments.push_back({Axis::X, {0, 0, 0}, -3.0});
    CHECK(cc_length(one) == 3.0);
}

TEST_CASE("pi_t_length") {
    CHECK(pi_t_length({{{0, 0, 0}, {0, 0, 1}}}) == 0.0); // vertical moves are free
    CHECK(pi_t_length({{{0, 0, 0}, {1, 1, 7}}}) == 2.0);
    CHECK(pi_t_length({{{5, -2, 1}}}) == 0.0);
    CHECK_THROWS_AS(pi_t_length(Polyline3{}), invalid_parameter);

    // axis-aligned moves: taxicab equals the cc-length of the path
    const BangBangPath path = bang_bang({0, 0, 0}, {0, 0, 1});
    CHECK(pi_t_length(as_polyline(path, 7)) ==
          doctest::Approx(cc_length(path)).epsilon(1e-15));

    // general polylines: taxicab at most sqrt(2) times the planar l2 length
    for (int k = 0; k < 100; ++k) {
        Polyline3 poly;
        for (int i = 0; i < 10; ++i) poly.vertices.push_back(random_point(5, 5));
        double l2 = 0;
        for (size_t i = 1; i < poly.vertices.size(); ++i)
            l2 += planar_dist(poly.vertices[i - 1], poly.vertices[i]);
        CHECK(pi_t_length(poly) <= std::sqrt(2.0) * l2 * (1 + 1e-12));
    }
}

TEST_CASE("as_polyline") {
    const BangBangPath path = bang_bang({0, 0, 0}, {1, 1, -2});
    const Polyline3 wp = as_polyline(path, 1);
    CHECK(wp.vertices.size() == 5); // waypoints only (two segments are zero)

    // group-law interpolation along an X-segment
    AxisSegment seg{Axis::X, {1, 2, 3}, 2.0};
    const HPoint mid = seg.at(1.0);
    CHECK(mid.x == 2.0);
    CHECK(mid.y == 2.0);
    CHECK(mid.t == 7.0);

    AxisSegment ys{Axis::Y, {1, 2, 3}, -1.0};
    const HPoint ye = ys.end();
    CHECK(ye.x == 1.0);
    CHECK(ye.y == 1.0);
    CHECK(ye.t == 5.0);

    CHECK_THROWS_AS(as_polyline(path, 0), invalid_parameter);

    // vertices lie exactly on the segments; endpoints preserved
    BangBangPath bp = bang_bang({0.3, -0.7, 2.0}, {-1, 2, 5});
    Polyline3 fine = as_polyline(bp, 17);
    CHECK(fine.vertices.size() == 4 * 17 + 1);
    CHECK(koranyi_dist(fine.vertices.back(), bp.end()) == 0.0);
}
