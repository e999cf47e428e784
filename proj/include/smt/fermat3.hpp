#pragma once

#include <array>
#include <optional>
#include <utility>

#include "smt/geometry.hpp"

namespace smt {

struct Circle {
    Point center;
    double radius = 0.0;
};

/// Result of the angle test on a triangle. `wide_vertex` is the 0-based
/// index of the vertex whose angle is at least 2*pi/3, if any.
struct FermatCondition {
    bool all_sharp = true;
    std::optional<std::size_t> wide_vertex;
    /// r_ij^2 + r_ik^2 + r_ij r_ik - r_jk^2 for the angle at each vertex.
    std::array<double, 3> margins{};
};

FermatCondition fermat_condition(const Triangle& t, const Tolerance& tol = {});

enum class Solution3Kind { Interior, DegenerateAtVertex };

struct Solution3 {
    Solution3Kind kind = Solution3Kind::Interior;
    std::optional<Point> steiner;              // Interior only
    std::optional<std::size_t> vertex;         // DegenerateAtVertex only
    std::optional<std::array<double, 3>> kappas;  // Interior only
    double s_abs = 0.0;                        // |doubled area|
    double length = 0.0;
};

/// Shortest network for three terminals: the Fermat-Torricelli point when
/// every angle is below 2*pi/3, the two sides at the wide vertex otherwise.
Solution3 solve3(const Triangle& t, const Tolerance& tol = {});

/// Circle through p1, p2 and the apex q1 of the equilateral triangle on p1p2.
/// q1 lies to the right of the directed segment p1->p2, i.e. outside any
/// counterclockwise triangle p1 p2 p3. Throws GeometryError(CoincidentPoints).
std::pair<Circle, Point> steiner_circle(const Point& p1, const Point& p2);

/// Apex of the equilateral triangle erected to the right of p1->p2.
Point equilateral_apex(const Point& p1, const Point& p2);

}  // namespace smt
