#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "smt/fermat3.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace smt;

namespace {

double network_length(const Triangle& t, const Point& s) {
    return pairwise_distance(t[0], s) + pairwise_distance(t[1], s) + pairwise_distance(t[2], s);
}

Point brute_force_point(const Triangle& t) {
    const double scale = t.scale();
    const std::array<double, 2> start{(t[0].x() + t[1].x() + t[2].x()) / 3.0, (t[0].y() + t[1].y() + t[2].y()) / 3.0};
    const auto best = test::compass_minimize<2>(
        [&](const std::array<double, 2>& v) { return network_length(t, Point(v[0], v[1])); }, start, 0.25 * scale,
        1e-13 * scale);
    return {best[0], best[1]};
}

double angle_at(const Point& apex, const Point& a, const Point& b) {
    const Point u = a - apex;
    const Point v = b - apex;
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

}  // namespace

TEST(Solve3, WorkedTriangleMatchesDirectMinimization) {
    const Triangle t = Triangle::make(Point(4, 4), Point(2, 1), Point(7, 1));
    const Solution3 sol = solve3(t);
    ASSERT_EQ(sol.kind, Solution3Kind::Interior);
    // Frozen from an independent high-precision minimization.
    EXPECT_NEAR(sol.steiner->x(), 4.108003792289191, 1e-12);
    EXPECT_NEAR(sol.steiner->y(), 2.4166369679899016, 1e-12);
    EXPECT_NEAR(sol.length, 7.347160139369031, 1e-12);
    EXPECT_DOUBLE_EQ(sol.s_abs, 15.0);

    const Point bf = brute_force_point(t);
    EXPECT_NEAR(pairwise_distance(bf, *sol.steiner), 0.0, 1e-7);
    EXPECT_NEAR(network_length(t, *sol.steiner), sol.length, 1e-12);
}

TEST(Solve3, KappaProductIdentity) {
    const Triangle t = Triangle::make(Point(4, 4), Point(2, 1), Point(7, 1));
    const Solution3 sol = solve3(t);
    const auto& k = *sol.kappas;
    const double dsq = sol.length * sol.length;
    EXPECT_NEAR(k[0] * k[1] + k[1] * k[2] + k[0] * k[2], 2.0 * test::kSqrt3 * sol.s_abs * dsq, 1e-9 * dsq * dsq);
    for (double ki : k) EXPECT_GT(ki, 0.0);
}

TEST(Solve3, RandomSharpTrianglesAgreeWithBruteForce) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto p = test::random_sharp_ccw_triangle(rng);
        const Triangle t = Triangle::make(p[0], p[1], p[2]);
        const Solution3 sol = solve3(t);
        ASSERT_EQ(sol.kind, Solution3Kind::Interior);
        const Point s = *sol.steiner;
        const double scale = t.scale();
        EXPECT_NEAR(network_length(t, s), sol.length, 1e-9 * scale);
        EXPECT_LE(sol.length, network_length(t, brute_force_point(t)) + 1e-9 * scale);
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_NEAR(angle_at(s, t[j], t[(j + 1) % 3]), 2.0 * std::numbers::pi / 3.0, 1e-9);
        }
    }
}

TEST(Solve3, WideAngleCollapsesToVertex) {
    // Angle at (0,0) is 150 degrees.
    const Triangle t = Triangle::make(Point(0, 0), Point(1, 0), Point(-std::cos(std::numbers::pi / 6), 0.5));
    const Solution3 sol = solve3(t);
    EXPECT_EQ(sol.kind, Solution3Kind::DegenerateAtVertex);
    ASSERT_TRUE(sol.vertex.has_value());
    EXPECT_EQ(*sol.vertex, 0u);
    EXPECT_FALSE(sol.steiner.has_value());
    EXPECT_NEAR(sol.length, 2.0, 1e-15);
    const Point bf = brute_force_point(t);
    EXPECT_NEAR(pairwise_distance(bf, t[0]), 0.0, 1e-7);
}

TEST(Solve3, ExactlyTwoThirdsPiIsTheBoundary) {
    const double a = 2.0 * std::numbers::pi / 3.0;
    const Triangle t = Triangle::make(Point(0, 0), Point(2, 0), Point(3 * std::cos(a), 3 * std::sin(a)));
    const auto cond = fermat_condition(t);
    EXPECT_FALSE(cond.all_sharp);
    EXPECT_EQ(cond.wide_vertex, std::optional<std::size_t>(0));
    EXPECT_EQ(solve3(t).kind, Solution3Kind::DegenerateAtVertex);
    EXPECT_NEAR(solve3(t).length, 5.0, 1e-12);
}

TEST(Solve3, ClockwiseInputGivesSamePoint) {
    const Triangle ccw = Triangle::make(Point(4, 4), Point(2, 1), Point(7, 1));
    const Triangle cw = Triangle::make(Point(4, 4), Point(7, 1), Point(2, 1));
    EXPECT_NEAR(pairwise_distance(*solve3(ccw).steiner, *solve3(cw).steiner), 0.0, 1e-14);
}

TEST(SteinerCircle, UnitSegment) {
    const auto [c, q1] = steiner_circle(Point(0, 0), Point(1, 0));
    EXPECT_NEAR(c.center.x(), 0.5, 1e-15);
    EXPECT_NEAR(c.center.y(), -0.5 / test::kSqrt3, 1e-15);
    EXPECT_NEAR(c.radius, 1.0 / test::kSqrt3, 1e-15);
    EXPECT_NEAR(q1.x(), 0.5, 1e-15);
    EXPECT_NEAR(q1.y(), -0.5 * test::kSqrt3, 1e-15);
    EXPECT_THROW(steiner_circle(Point(2, 3), Point(2, 3)), GeometryError);
}

TEST(SteinerCircle, ContainsSteinerPointAndApexGivesLength) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const auto p = test::random_sharp_ccw_triangle(rng);
        const Triangle t = Triangle::make(p[0], p[1], p[2]);
        const Solution3 sol = solve3(t);
        const double scale = t.scale();
        for (std::size_t j = 0; j < 3; ++j) {
            const auto [c, q] = steiner_circle(p[j], p[(j + 1) % 3]);
            EXPECT_NEAR(pairwise_distance(c.center, p[j]), c.radius, 1e-12 * scale);
            EXPECT_NEAR(pairwise_distance(c.center, q), c.radius, 1e-12 * scale);
            EXPECT_NEAR(pairwise_distance(c.center, *sol.steiner), c.radius, 1e-9 * scale);
            // Apex lies outside the triangle, opposite the third vertex.
            EXPECT_LT(signed_area2(p[j], p[(j + 1) % 3], q), 0.0);
            EXPECT_NEAR(pairwise_distance(q, p[(j + 2) % 3]), sol.length, 1e-9 * scale);
        }
    }
}
