#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace smt {

/// A position in the Euclidean plane. Coordinates are always finite.
class Point {
public:
    constexpr Point() = default;
    Point(double x, double y);

    constexpr double x() const { return x_; }
    constexpr double y() const { return y_; }

    friend constexpr bool operator==(const Point&, const Point&) = default;

private:
    double x_ = 0.0;
    double y_ = 0.0;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double s, const Point& p);

double dot(const Point& a, const Point& b);
double cross(const Point& a, const Point& b);
double norm(const Point& v);

/// Relative tolerances. eps_geom drives classification thresholds
/// (scaled by scale or scale^2), eps_solve drives the numeric oracle.
struct Tolerance {
    double eps_geom = 1e-9;
    double eps_solve = 1e-12;

    /// Throws std::invalid_argument unless 0 < eps_solve <= eps_geom < 1.
    void validate() const;
};

enum class GeometryErrorKind { NonFinite, Degenerate, NotCCW, NotConvex, CoincidentPoints };

std::string to_string(GeometryErrorKind kind);

class GeometryError : public std::invalid_argument {
public:
    GeometryError(GeometryErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}

    GeometryErrorKind kind() const { return kind_; }

private:
    GeometryErrorKind kind_;
};

double pairwise_distance(const Point& a, const Point& b);
double squared_distance(const Point& a, const Point& b);

/// Doubled signed area of abc; positive iff counterclockwise.
double signed_area2(const Point& a, const Point& b, const Point& c);

/// Largest pairwise distance among the points; 0 for fewer than two.
double point_scale(std::span<const Point> pts);

/// Three non-collinear terminals, in the order given.
class Triangle {
public:
    static Triangle make(const Point& p1, const Point& p2, const Point& p3, const Tolerance& tol = {});

    const Point& operator[](std::size_t i) const { return p_[i]; }
    const std::array<Point, 3>& points() const { return p_; }
    double scale() const { return point_scale(p_); }

private:
    explicit Triangle(std::array<Point, 3> p) : p_(p) {}
    std::array<Point, 3> p_;
};

enum class QuadDefect { None, NotCCW, NotConvex, Degenerate };

std::string to_string(QuadDefect d);

/// Classification used by validate_quad. Never throws.
QuadDefect classify_quad(const std::array<Point, 4>& p, const Tolerance& tol = {});

/// Four terminals forming a strictly convex counterclockwise quadrilateral.
class Quad {
public:
    const Point& operator[](std::size_t i) const { return p_[i]; }
    const std::array<Point, 4>& points() const { return p_; }
    double scale() const { return point_scale(p_); }

    /// The same quadrilateral relabeled (P2, P3, P4, P1).
    Quad rotated() const;

private:
    friend Quad validate_quad(const Point&, const Point&, const Point&, const Point&, const Tolerance&);
    explicit Quad(std::array<Point, 4> p) : p_(p) {}
    std::array<Point, 4> p_;
};

/// Throws GeometryError (NotCCW, NotConvex or Degenerate) on rejection.
Quad validate_quad(const Point& p1, const Point& p2, const Point& p3, const Point& p4, const Tolerance& tol = {});
Quad validate_quad(const std::array<Point, 4>& p, const Tolerance& tol = {});

/// Angle in [0, pi] between the diagonal vectors P1P3 and P2P4.
double diagonal_angle(const Quad& q);

}  // namespace smt
