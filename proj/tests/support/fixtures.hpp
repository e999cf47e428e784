#pragma once

#include <array>
#include <cmath>

#include "smt/geometry.hpp"

namespace smt::test {

inline const double kSqrt3 = std::sqrt(3.0);

// Worked four-terminal instance with distinct topology lengths.
inline std::array<Point, 4> example_quad() { return {Point(2, 6), Point(1, 1), Point(9, 2), Point(6, 7)}; }

// Instance with orthogonal diagonals (both topologies tie).
inline std::array<Point, 4> orthogonal_quad() { return {Point(1, 6), Point(2, 1), Point(6, 1), Point(8, 7)}; }

inline std::array<Point, 4> unit_square() { return {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)}; }

// Elongated quad whose diagonals meet at about 161.6 degrees.
inline std::array<Point, 4> wide_diagonal_quad() { return {Point(0, 0), Point(8, -1), Point(10, 0), Point(2, 1)}; }

// Wandering-terminal configuration: fixed P1, P2, P4 and the P3 start.
inline const Point kLociP1(5, 8);
inline const Point kLociP2(1, 1);
inline const Point kLociP4(10, 7);
inline const Point kLociP3Start(11, 3);

}  // namespace smt::test
