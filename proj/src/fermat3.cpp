#include "smt/fermat3.hpp"

#include <cmath>
#include <numbers>

namespace smt {

namespace {
constexpr double kSqrt3 = std::numbers::sqrt3;
}

FermatCondition fermat_condition(const Triangle& t, const Tolerance& tol) {
    const double r12 = pairwise_distance(t[0], t[1]);
    const double r13 = pairwise_distance(t[0], t[2]);
    const double r23 = pairwise_distance(t[1], t[2]);
    FermatCondition out;
    out.margins = {
        r12 * r12 + r13 * r13 + r12 * r13 - r23 * r23,
        r23 * r23 + r12 * r12 + r12 * r23 - r13 * r13,
        r13 * r13 + r23 * r23 + r13 * r23 - r12 * r12,
    };
    const double scale = t.scale();
    const double thr = tol.eps_geom * scale * scale;
    // At most one angle can reach 2*pi/3; report the smallest margin.
    std::size_t worst = 0;
    for (std::size_t i = 1; i < 3; ++i) {
        if (out.margins[i] < out.margins[worst]) worst = i;
    }
    if (!(out.margins[worst] > thr)) {
        out.all_sharp = false;
        out.wide_vertex = worst;
    }
    return out;
}

Solution3 solve3(const Triangle& t, const Tolerance& tol) {
    const auto cond = fermat_condition(t, tol);
    const double r12sq = squared_distance(t[0], t[1]);
    const double r13sq = squared_distance(t[0], t[2]);
    const double r23sq = squared_distance(t[1], t[2]);

    Solution3 sol;
    sol.s_abs = std::abs(signed_area2(t[0], t[1], t[2]));

    if (!cond.all_sharp) {
        const std::size_t j = *cond.wide_vertex;
        const std::size_t a = (j + 1) % 3;
        const std::size_t b = (j + 2) % 3;
        sol.kind = Solution3Kind::DegenerateAtVertex;
        sol.vertex = j;
        sol.length = pairwise_distance(t[j], t[a]) + pairwise_distance(t[j], t[b]);
        return sol;
    }

    const double k1 = 0.5 * kSqrt3 * (r12sq + r13sq - r23sq) + sol.s_abs;
    const double k2 = 0.5 * kSqrt3 * (r23sq + r12sq - r13sq) + sol.s_abs;
    const double k3 = 0.5 * kSqrt3 * (r13sq + r23sq - r12sq) + sol.s_abs;
    const double dsq = 0.5 * (r12sq + r13sq + r23sq) + kSqrt3 * sol.s_abs;

    // Cleared-denominator form of the weighted average: no division by a
    // single kappa, which vanishes at the 2*pi/3 boundary.
    const double w1 = k2 * k3;
    const double w2 = k1 * k3;
    const double w3 = k1 * k2;
    const double den = 2.0 * kSqrt3 * sol.s_abs * dsq;
    sol.steiner = Point((w1 * t[0].x() + w2 * t[1].x() + w3 * t[2].x()) / den,
                        (w1 * t[0].y() + w2 * t[1].y() + w3 * t[2].y()) / den);
    sol.kappas = std::array<double, 3>{k1, k2, k3};
    sol.length = std::sqrt(dsq);
    return sol;
}

Point equilateral_apex(const Point& p1, const Point& p2) {
    return {0.5 * p1.x() + 0.5 * p2.x() - 0.5 * kSqrt3 * p1.y() + 0.5 * kSqrt3 * p2.y(),
            0.5 * kSqrt3 * p1.x() - 0.5 * kSqrt3 * p2.x() + 0.5 * p1.y() + 0.5 * p2.y()};
}

std::pair<Circle, Point> steiner_circle(const Point& p1, const Point& p2) {
    const double r12 = pairwise_distance(p1, p2);
    if (r12 == 0.0) {
        throw GeometryError(GeometryErrorKind::CoincidentPoints, "circle needs two distinct points");
    }
    const double h = 0.5 / kSqrt3;
    const Point center(0.5 * p1.x() + 0.5 * p2.x() - h * p1.y() + h * p2.y(),
                       h * p1.x() - h * p2.x() + 0.5 * p1.y() + 0.5 * p2.y());
    return {Circle{center, r12 / kSqrt3}, equilateral_apex(p1, p2)};
}

}  // namespace smt
