#include "smt/geometry.hpp"

#include <algorithm>

namespace smt {

Point::Point(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw GeometryError(GeometryErrorKind::NonFinite, "point coordinates must be finite");
    }
}

Point operator+(const Point& a, const Point& b) { return {a.x() + b.x(), a.y() + b.y()}; }
Point operator-(const Point& a, const Point& b) { return {a.x() - b.x(), a.y() - b.y()}; }
Point operator*(double s, const Point& p) { return {s * p.x(), s * p.y()}; }

double dot(const Point& a, const Point& b) { return a.x() * b.x() + a.y() * b.y(); }
double cross(const Point& a, const Point& b) { return a.x() * b.y() - a.y() * b.x(); }
double norm(const Point& v) { return std::hypot(v.x(), v.y()); }

void Tolerance::validate() const {
    if (!(eps_solve > 0.0 && eps_solve <= eps_geom && eps_geom < 1.0)) {
        throw std::invalid_argument("tolerance requires 0 < eps_solve <= eps_geom < 1");
    }
}

std::string to_string(GeometryErrorKind kind) {
    switch (kind) {
        case GeometryErrorKind::NonFinite: return "NonFinite";
        case GeometryErrorKind::Degenerate: return "Degenerate";
        case GeometryErrorKind::NotCCW: return "NotCCW";
        case GeometryErrorKind::NotConvex: return "NotConvex";
        case GeometryErrorKind::CoincidentPoints: return "CoincidentPoints";
    }
    return "Unknown";
}

double pairwise_distance(const Point& a, const Point& b) { return norm(a - b); }

double squared_distance(const Point& a, const Point& b) {
    const Point d = a - b;
    return dot(d, d);
}

double signed_area2(const Point& a, const Point& b, const Point& c) {
    // Expansion of | 1 1 1 ; xa xb xc ; ya yb yc | around a.
    return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

double point_scale(std::span<const Point> pts) {
    double s = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            s = std::max(s, pairwise_distance(pts[i], pts[j]));
        }
    }
    return s;
}

Triangle Triangle::make(const Point& p1, const Point& p2, const Point& p3, const Tolerance& tol) {
    std::array<Point, 3> p{p1, p2, p3};
    const double scale = point_scale(p);
    if (!(std::abs(signed_area2(p1, p2, p3)) > tol.eps_geom * scale * scale)) {
        throw GeometryError(GeometryErrorKind::Degenerate, "triangle terminals are collinear");
    }
    return Triangle(p);
}

std::string to_string(QuadDefect d) {
    switch (d) {
        case QuadDefect::None: return "None";
        case QuadDefect::NotCCW: return "NotCCW";
        case QuadDefect::NotConvex: return "NotConvex";
        case QuadDefect::Degenerate: return "Degenerate";
    }
    return "Unknown";
}

QuadDefect classify_quad(const std::array<Point, 4>& p, const Tolerance& tol) {
    const double scale = point_scale(p);
    const double thr = tol.eps_geom * scale * scale;
    int positive = 0;
    int negative = 0;
    // The four consecutive triples are all C(4,3) triples of the terminals.
    for (std::size_t i = 0; i < 4; ++i) {
        const double c = signed_area2(p[i], p[(i + 1) % 4], p[(i + 2) % 4]);
        if (!(std::abs(c) > thr)) return QuadDefect::Degenerate;
        (c > 0.0 ? positive : negative) += 1;
    }
    if (positive == 4) return QuadDefect::None;
    if (negative == 4) return QuadDefect::NotCCW;
    return QuadDefect::NotConvex;
}

Quad Quad::rotated() const { return Quad({p_[1], p_[2], p_[3], p_[0]}); }

Quad validate_quad(const Point& p1, const Point& p2, const Point& p3, const Point& p4, const Tolerance& tol) {
    std::array<Point, 4> p{p1, p2, p3, p4};
    switch (classify_quad(p, tol)) {
        case QuadDefect::None: return Quad(p);
        case QuadDefect::NotCCW:
            throw GeometryError(GeometryErrorKind::NotCCW, "quadrilateral is convex but clockwise");
        case QuadDefect::NotConvex:
            throw GeometryError(GeometryErrorKind::NotConvex, "quadrilateral is not convex in the given order");
        case QuadDefect::Degenerate:
            throw GeometryError(GeometryErrorKind::Degenerate, "three terminals are collinear within tolerance");
    }
    throw GeometryError(GeometryErrorKind::Degenerate, "unclassified quadrilateral");
}

Quad validate_quad(const std::array<Point, 4>& p, const Tolerance& tol) {
    return validate_quad(p[0], p[1], p[2], p[3], tol);
}

double diagonal_angle(const Quad& q) {
    const Point d13 = q[2] - q[0];
    const Point d24 = q[3] - q[1];
    return std::atan2(std::abs(cross(d13, d24)), dot(d13, d24));
}

}  // namespace smt
