#pragma once

#include <optional>
#include <span>
#include <vector>

#include "smt/fermat3.hpp"
#include "smt/steiner4.hpp"

namespace smt {

/// Circles traced by the junctions of T12_34 while P3 moves and P1, P2, P4
/// stay fixed: S1 runs on c_small, S2 on c_hat.
struct LocusReport {
    Circle c_small;
    Circle c_hat;
    Point q1;
    Point i_point;  // c_small meets the diagonal P2P4 here
    double s_124 = 0.0;
};

/// Requires P1, P2, P4 counterclockwise. Throws GeometryError with kind
/// Degenerate (collinear) or NotCCW (clockwise).
LocusReport wandering_loci(const Point& p1, const Point& p2, const Point& p4, const Tolerance& tol = {});

struct SweepRow {
    Point p3;
    QuadDefect defect = QuadDefect::None;
    std::vector<DeltaName> failing;   // set when the quad is valid but T12_34 does not exist
    std::optional<FullTree> tree;     // T12_34, when it exists
    bool on_c_small = false;
    bool on_c_hat = false;
    double c_small_offset = 0.0;      // | |S1 - C| - r |
    double c_hat_offset = 0.0;        // | |S2 - C^| - r^ |
};

/// Solves T12_34 at every P3 position. Rows are independent; this version
/// fans out over OpenMP threads.
std::vector<SweepRow> loci_sweep(const Point& p1, const Point& p2, const Point& p4, std::span<const Point> path,
                                 const Tolerance& tol = {});

/// Single-threaded reference for loci_sweep; results are identical.
std::vector<SweepRow> loci_sweep_serial(const Point& p1, const Point& p2, const Point& p4,
                                        std::span<const Point> path, const Tolerance& tol = {});

/// `samples` points spaced evenly by arc length along the polyline, both ends
/// included. A zero-length polyline yields its single point.
std::vector<Point> sample_polyline(std::span<const Point> vertices, std::size_t samples);

}  // namespace smt
