#include "smt/loci.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace smt {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

SweepRow sweep_row(const Point& p1, const Point& p2, const Point& p4, const Point& p3, const LocusReport& loci,
                   const Tolerance& tol) {
    SweepRow row;
    row.p3 = p3;
    const std::array<Point, 4> pts{p1, p2, p3, p4};
    row.defect = classify_quad(pts, tol);
    if (row.defect != QuadDefect::None) return row;

    const Quad q = validate_quad(pts, tol);
    const Scratch4 s = scratch(q);
    const double scale = q.scale();
    auto e = existence(s, scale, tol);
    if (!e.exists()) {
        row.failing = std::move(e.failing);
        return row;
    }
    row.tree = solve_topology(q, tol);
    row.c_small_offset = std::abs(pairwise_distance(row.tree->s1, loci.c_small.center) - loci.c_small.radius);
    row.c_hat_offset = std::abs(pairwise_distance(row.tree->s2, loci.c_hat.center) - loci.c_hat.radius);
    row.on_c_small = row.c_small_offset <= tol.eps_geom * scale;
    row.on_c_hat = row.c_hat_offset <= tol.eps_geom * scale;
    return row;
}

}  // namespace

LocusReport wandering_loci(const Point& p1, const Point& p2, const Point& p4, const Tolerance& tol) {
    const std::array<Point, 3> fixed{p1, p2, p4};
    const double scale = point_scale(fixed);
    const double s124 = signed_area2(p1, p2, p4);
    if (!(std::abs(s124) > tol.eps_geom * scale * scale)) {
        throw GeometryError(GeometryErrorKind::Degenerate, "fixed terminals P1, P2, P4 are collinear");
    }
    if (s124 < 0.0) {
        throw GeometryError(GeometryErrorKind::NotCCW, "fixed terminals P1, P2, P4 must be counterclockwise");
    }

    const double x1 = p1.x(), y1 = p1.y();
    const double x2 = p2.x(), y2 = p2.y();
    const double x4 = p4.x(), y4 = p4.y();

    LocusReport rep;
    rep.s_124 = s124;
    const auto [c_small, q1] = steiner_circle(p1, p2);
    rep.c_small = c_small;
    rep.q1 = q1;

    const double h = 0.5 / kSqrt3;
    rep.c_hat.center = Point(0.5 * x1 + 0.5 * x4 + h * (-y1 + 2.0 * y2 - y4),
                             0.5 * y1 + 0.5 * y4 + h * (x1 - 2.0 * x2 + x4));
    const double half_sum = 0.5 * (squared_distance(p1, p2) + squared_distance(p1, p4) + squared_distance(p2, p4));
    rep.c_hat.radius = std::sqrt((half_sum + kSqrt3 * s124) / 3.0);

    const double f = s124 / (kSqrt3 * squared_distance(p2, p4));
    rep.i_point = Point(x1 + f * (kSqrt3 * (y4 - y2) + x2 - x4), y1 + f * (kSqrt3 * (x2 - x4) + y2 - y4));
    return rep;
}

std::vector<SweepRow> loci_sweep(const Point& p1, const Point& p2, const Point& p4, std::span<const Point> path,
                                 const Tolerance& tol) {
    const LocusReport loci = wandering_loci(p1, p2, p4, tol);
    std::vector<SweepRow> rows(path.size());
    const auto n = static_cast<std::ptrdiff_t>(path.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)] = sweep_row(p1, p2, p4, path[static_cast<std::size_t>(i)], loci, tol);
    }
    return rows;
}

std::vector<SweepRow> loci_sweep_serial(const Point& p1, const Point& p2, const Point& p4,
                                        std::span<const Point> path, const Tolerance& tol) {
    const LocusReport loci = wandering_loci(p1, p2, p4, tol);
    std::vector<SweepRow> rows;
    rows.reserve(path.size());
    for (const Point& p3 : path) rows.push_back(sweep_row(p1, p2, p4, p3, loci, tol));
    return rows;
}

std::vector<Point> sample_polyline(std::span<const Point> vertices, std::size_t samples) {
    if (vertices.empty()) throw std::invalid_argument("polyline needs at least one vertex");
    if (samples == 0) throw std::invalid_argument("sample count must be positive");

    std::vector<double> cumulative{0.0};
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        cumulative.push_back(cumulative.back() + pairwise_distance(vertices[i - 1], vertices[i]));
    }
    const double total = cumulative.back();
    if (total == 0.0 || samples == 1) return {vertices.front()};

    std::vector<Point> out;
    out.reserve(samples);
    std::size_t seg = 1;
    for (std::size_t k = 0; k < samples; ++k) {
        if (k + 1 == samples) {
            out.push_back(vertices.back());
            break;
        }
        const double target = total * static_cast<double>(k) / static_cast<double>(samples - 1);
        while (seg + 1 < vertices.size() && cumulative[seg] < target) ++seg;
        const double len = cumulative[seg] - cumulative[seg - 1];
        const double t = len > 0.0 ? (target - cumulative[seg - 1]) / len : 0.0;
        const Point& a = vertices[seg - 1];
        const Point& b = vertices[seg];
        out.emplace_back(a.x() + t * (b.x() - a.x()), a.y() + t * (b.y() - a.y()));
    }
    return out;
}

}  // namespace smt
