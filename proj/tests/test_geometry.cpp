#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "smt/geometry.hpp"
#include "support/fixtures.hpp"

using namespace smt;

TEST(Point, RejectsNonFiniteCoordinates) {
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (auto [x, y] : {std::pair{inf, 0.0}, std::pair{0.0, -inf}, std::pair{nan, 1.0}}) {
        try {
            Point p(x, y);
            FAIL() << "accepted non-finite point";
        } catch (const GeometryError& e) {
            EXPECT_EQ(e.kind(), GeometryErrorKind::NonFinite);
        }
    }
}

TEST(Point, Arithmetic) {
    const Point a(1, 2);
    const Point b(4, -2);
    EXPECT_EQ(a + b, Point(5, 0));
    EXPECT_EQ(b - a, Point(3, -4));
    EXPECT_EQ(2.0 * a, Point(2, 4));
    EXPECT_DOUBLE_EQ(dot(a, b), 0.0);
    EXPECT_DOUBLE_EQ(cross(a, b), -10.0);
    EXPECT_DOUBLE_EQ(norm(b - a), 5.0);
    EXPECT_DOUBLE_EQ(pairwise_distance(a, b), 5.0);
    EXPECT_DOUBLE_EQ(squared_distance(a, b), 25.0);
}

TEST(Tolerance, Validate) {
    EXPECT_NO_THROW(Tolerance{}.validate());
    EXPECT_THROW((Tolerance{1e-9, 1e-8}.validate()), std::invalid_argument);
    EXPECT_THROW((Tolerance{0.0, 0.0}.validate()), std::invalid_argument);
    EXPECT_THROW((Tolerance{1.0, 1e-12}.validate()), std::invalid_argument);
}

TEST(SignedArea, Orientation) {
    EXPECT_GT(signed_area2(Point(0, 0), Point(1, 0), Point(0, 1)), 0.0);
    EXPECT_LT(signed_area2(Point(0, 0), Point(0, 1), Point(1, 0)), 0.0);
    EXPECT_DOUBLE_EQ(signed_area2(Point(4, 4), Point(2, 1), Point(7, 1)), 15.0);
}

TEST(PointScale, LargestPairwiseDistance) {
    const Point pts[] = {Point(0, 0), Point(3, 0), Point(0, 4)};
    EXPECT_DOUBLE_EQ(point_scale(pts), 5.0);
    EXPECT_DOUBLE_EQ(point_scale(std::span<const Point>(pts, 1)), 0.0);
}

TEST(Triangle, RejectsCollinear) {
    try {
        Triangle::make(Point(0, 0), Point(1, 1), Point(2, 2));
        FAIL();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.kind(), GeometryErrorKind::Degenerate);
    }
    // Nearly collinear at a large scale: below eps * scale^2.
    EXPECT_THROW(Triangle::make(Point(0, 0), Point(1e6, 0), Point(2e6, 1e-5)), GeometryError);
    EXPECT_NO_THROW(Triangle::make(Point(0, 0), Point(1e6, 0), Point(2e6, 10)));
}

TEST(ClassifyQuad, Defects) {
    EXPECT_EQ(classify_quad(test::unit_square()), QuadDefect::None);
    EXPECT_EQ(classify_quad({Point(0, 0), Point(0, 1), Point(1, 1), Point(1, 0)}), QuadDefect::NotCCW);
    EXPECT_EQ(classify_quad({Point(0, 0), Point(4, 0), Point(1, 1), Point(0, 4)}), QuadDefect::NotConvex);
    // Self-intersecting (bow tie).
    EXPECT_EQ(classify_quad({Point(0, 0), Point(1, 1), Point(1, 0), Point(0, 1)}), QuadDefect::NotConvex);
    EXPECT_EQ(classify_quad({Point(0, 0), Point(1, 0), Point(2, 0), Point(0, 1)}), QuadDefect::Degenerate);
    EXPECT_EQ(classify_quad({Point(0, 0), Point(0, 0), Point(1, 1), Point(0, 1)}), QuadDefect::Degenerate);
}

TEST(ValidateQuad, ThrowsWithKind) {
    auto kind_of = [](const std::array<Point, 4>& p) {
        try {
            validate_quad(p);
        } catch (const GeometryError& e) {
            return e.kind();
        }
        return GeometryErrorKind::NonFinite;
    };
    EXPECT_EQ(kind_of({Point(0, 0), Point(0, 1), Point(1, 1), Point(1, 0)}), GeometryErrorKind::NotCCW);
    EXPECT_EQ(kind_of({Point(0, 0), Point(4, 0), Point(1, 1), Point(0, 4)}), GeometryErrorKind::NotConvex);
    EXPECT_EQ(kind_of({Point(0, 0), Point(1, 0), Point(2, 0), Point(0, 1)}), GeometryErrorKind::Degenerate);
    EXPECT_NO_THROW(validate_quad(test::example_quad()));
}

TEST(Quad, RotatedRelabels) {
    const Quad q = validate_quad(test::example_quad());
    const Quad r = q.rotated();
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(r[i], q[(i + 1) % 4]);
    EXPECT_DOUBLE_EQ(r.scale(), q.scale());
}

TEST(DiagonalAngle, KnownValues) {
    EXPECT_NEAR(diagonal_angle(validate_quad(test::unit_square())), std::numbers::pi / 2, 1e-15);
    EXPECT_NEAR(diagonal_angle(validate_quad(test::orthogonal_quad())), std::numbers::pi / 2, 1e-15);
    // P1P3 = (7,-4), P2P4 = (5,6): cos = 11 / sqrt(65 * 61).
    EXPECT_NEAR(diagonal_angle(validate_quad(test::example_quad())), std::acos(11.0 / std::sqrt(65.0 * 61.0)),
                1e-12);
}

TEST(ErrorKind, Names) {
    EXPECT_EQ(to_string(GeometryErrorKind::NotCCW), "NotCCW");
    EXPECT_EQ(to_string(QuadDefect::NotConvex), "NotConvex");
}
