#include <doctest.h>

#include <cmath>
#include <random>

#include "heisgeo/core.hpp"

using namespace heisgeo;

namespace {

std::mt19937_64 rng(12345);

HPoint random_point(double box, double tbox) {
    std::uniform_real_distribution<double> u(-box, box), ut(-tbox, tbox);
    return {u(rng), u(rng), ut(rng)};
}

bool close(const HPoint& a, const HPoint& b, double tol) {
    return std::fabs(a.x - b.x) <= tol && std::fabs(a.y - b.y) <= tol &&
           std::fabs(a.t - b.t) <= tol;
}

} // namespace

TEST_CASE("group law") {
    HPoint r = mul({1, 2, 3}, {4, 5, 6});
    CHECK(r.x == 5.0);
    CHECK(r.y == 7.0);
    CHECK(r.t == 15.0);

    HPoint p{0.7, -1.3, 4.2};
    CHECK(close(mul(p, {0, 0, 0}), p, 0.0));

    r = mul({1, 0, 0}, {0, 1, 0});
    CHECK(r.x == 1.0);
    CHECK(r.y == 1.0);
    CHECK(r.t == -2.0);
}

TEST_CASE("inverse") {
    HPoint i = inv({1, 2, 3});
    CHECK(i.x == -1.0);
    CHECK(i.y == -2.0);
    CHECK(i.t == -3.0);
    CHECK(close(inv({0, 0, 0}), {0, 0, 0}, 0.0));

    for (int k = 0; k < 100; ++k) {
        HPoint p = random_point(10, 100);
        HPoint e = mul(p, inv(p));
        CHECK(e.x == 0.0);
        CHECK(e.y == 0.0);
        CHECK(e.t == 0.0); // exact: the twist terms cancel identically
        CHECK(close(inv(inv(p)), p, 0.0));
    }
}

TEST_CASE("associativity within rounding") {
    for (int k = 0; k < 1000; ++k) {
        HPoint a = random_point(10, 10), b = random_point(10, 10), c = random_point(10, 10);
        HPoint l = mul(mul(a, b), c), r = mul(a, mul(b, c));
        const double scale = std::max({1.0, std::fabs(l.t), std::fabs(r.t)});
        CHECK(std::fabs(l.x - r.x) <= 1e-12);
        CHECK(std::fabs(l.y - r.y) <= 1e-12);
        CHECK(std::fabs(l.t - r.t) <= 1e-12 * scale);
    }
}

TEST_CASE("dilation") {
    HPoint d = dilate(3, {1, 2, 3});
    CHECK(d.x == 3.0);
    CHECK(d.y == 6.0);
    CHECK(d.t == 27.0);

    HPoint p = random_point(5, 5);
    CHECK(close(dilate(1.0, p), p, 0.0));
    CHECK(close(dilate(2.0, dilate(0.5, p)), p, 0.0));
    CHECK_THROWS_AS(dilate(0.0, p), invalid_parameter);
    CHECK_THROWS_AS(dilate(-2.0, p), invalid_parameter);

    // homomorphism
    for (int k = 0; k < 100; ++k) {
        HPoint a = random_point(5, 5), b = random_point(5, 5);
        double r = std::uniform_real_distribution<double>(0.1, 4.0)(rng);
        HPoint lhs = dilate(r, mul(a, b));
        HPoint rhs = mul(dilate(r, a), dilate(r, b));
        CHECK(close(lhs, rhs, 1e-12 * std::max(1.0, std::fabs(lhs.t))));
    }
}

TEST_CASE("rotation") {
    HPoint r = rotate(M_PI / 2, {1, 0, 5});
    CHECK(r.x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.y == doctest::Approx(1.0));
    CHECK(r.t == 5.0);

    HPoint p = random_point(5, 5);
    CHECK(close(rotate(0.0, p), p, 0.0));
    CHECK(close(rotate(0.9, rotate(-0.9, p)), p, 1e-14));

    // commutes with proj_t up to the planar rotation
    const double th = 0.37;
    PlanarPoint a = proj_t(rotate(th, p));
    PlanarPoint b = proj_t(p);
    const double bx = b.x * std::cos(th) - b.y * std::sin(th);
    const double by = b.x * std::sin(th) + b.y * std::cos(th);
    CHECK(a.x == doctest::Approx(bx).epsilon(1e-14));
    CHECK(a.y == doctest::Approx(by).epsilon(1e-14));
}

TEST_CASE("projections") {
    HPoint px = proj_x({1, 2, 3});
    CHECK(px.x == 0.0);
    CHECK(px.y == 2.0);
    CHECK(px.t == -1.0);

    HPoint py = proj_y({1, 2, 3});
    CHECK(py.x == 1.0);
    CHECK(py.y == 0.0);
    CHECK(py.t == 7.0);

    PlanarPoint pt = proj_t({1, 2, 3});
    CHECK(pt.x == 1.0);
    CHECK(pt.y == 2.0);

    for (int k = 0; k < 100; ++k) {
        HPoint p = random_point(10, 100);
        HPoint a = proj_x(p);
        CHECK(close(proj_x(a), a, 0.0)); // idempotent, exactly
        HPoint b = proj_y(p);
        CHECK(close(proj_y(b), b, 0.0));
    }
}

TEST_CASE("koranyi gauge") {
    CHECK(koranyi_dist({0, 0, 0}, {1, 0, 0}) == 1.0);
    CHECK(koranyi_dist({0, 0, 0}, {0, 0, 1}) == 1.0);
    CHECK(koranyi_dist({0, 0, 0}, {1, 1, 0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    SUBCASE("vanishes iff equal, symmetric") {
        for (int k = 0; k < 100; ++k) {
            HPoint p = random_point(10, 100), q = random_point(10, 100);
            CHECK(koranyi_dist(p, p) == 0.0);
            CHECK(koranyi_dist(p, q) == doctest::Approx(koranyi_dist(q, p)).epsilon(1e-12));
            if (!(p.x == q.x && p.y == q.y && p.t == q.t)) CHECK(koranyi_dist(p, q) > 0.0);
        }
    }

    SUBCASE("left-invariance") {
        for (int k = 0; k < 1000; ++k) {
            HPoint g = random_point(10, 10), p = random_point(10, 10), q = random_point(10, 10);
            const double a = koranyi_dist(mul(g, p), mul(g, q));
            const double b = koranyi_dist(p, q);
            CHECK(std::fabs(a - b) <= 1e-9 * std::max(1.0, b));
        }
    }

    SUBCASE("homogeneity under dilations") {
        for (int k = 0; k < 1000; ++k) {
            HPoint p = random_point(10, 10), q = random_point(10, 10);
            const double r = std::uniform_real_distribution<double>(0.1, 8.0)(rng);
            const double a = koranyi_dist(dilate(r, p), dilate(r, q));
            const double b = r * koranyi_dist(p, q);
            CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, b));
        }
    }

    SUBCASE("triangle inequality, 1e4 triples") {
        for (int k = 0; k < 10000; ++k) {
            HPoint a = random_point(10, 100), b = random_point(10, 100), c = random_point(10, 100);
            const double ab = koranyi_dist(a, b), bc = koranyi_dist(b, c), ac = koranyi_dist(a, c);
            CHECK(ac <= ab + bc + 1e-9 * std::max(1.0, ac));
        }
    }
}
