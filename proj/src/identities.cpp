#include "smt/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace smt {

namespace {

constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;

double angle_at(const Point& apex, const Point& a, const Point& b) {
    const Point u = a - apex;
    const Point v = b - apex;
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

IdentityCheck make_check(std::string name, double value, double limit) {
    return {std::move(name), value, limit, value <= limit};
}

}  // namespace

double max_junction_angle_error(const Quad& q, const Point& s1, const Point& s2) {
    const double angles[] = {
        angle_at(s1, q[0], q[1]), angle_at(s1, q[0], s2), angle_at(s1, q[1], s2),
        angle_at(s2, q[2], q[3]), angle_at(s2, q[2], s1), angle_at(s2, q[3], s1),
    };
    double worst = 0.0;
    for (double a : angles) worst = std::max(worst, std::abs(a - kTwoThirdsPi));
    return worst;
}

std::vector<IdentityCheck> check_identities(const Quad& q, const Point& s1, const Point& s2, const Tolerance& tol,
                                            const std::optional<OracleResult>& oracle) {
    const double scale = q.scale();
    const double lin = tol.eps_geom * scale;
    const double quad = tol.eps_geom * scale * scale;
    const Scratch4 s = scratch(q);
    const double d = std::sqrt(s.t_quad / 3.0);

    std::vector<IdentityCheck> out;
    out.push_back(make_check(
        "delta_sum", std::abs(s.delta + s.delta1 + s.delta2 + s.delta3 + s.delta4 - s.t_quad / std::numbers::sqrt3),
        quad));

    const double edge_sum = pairwise_distance(q[0], s1) + pairwise_distance(q[1], s1) + pairwise_distance(q[2], s2) +
                            pairwise_distance(q[3], s2) + pairwise_distance(s1, s2);
    out.push_back(make_check("edge_sum", std::abs(edge_sum - d), lin));
    out.push_back(make_check("angles_120", max_junction_angle_error(q, s1, s2), kAngleTolerance));

    const auto [q1, q2] = q_points(q);
    const double length_spread = std::max({std::abs(d - length_via_ab(q)), std::abs(d - length_via_diagonals(q)),
                                           std::abs(d - length_via_law_of_cosines(q)),
                                           std::abs(d - pairwise_distance(q1, q2))});
    out.push_back(make_check("length_identities", length_spread, lin));

    const Point s1_alt = s1_anchored_at_p2(q, s);
    out.push_back(make_check("s1_representations", pairwise_distance(s1, s1_alt), lin));

    // Containment: every edge of the quad sees both junctions on its left.
    double min_area = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 4; ++i) {
        min_area = std::min(min_area, signed_area2(q[i], q[(i + 1) % 4], s1));
        min_area = std::min(min_area, signed_area2(q[i], q[(i + 1) % 4], s2));
    }
    out.push_back({"containment", min_area, 0.0, min_area > 0.0});

    double residual = std::numeric_limits<double>::infinity();
    try {
        residual = max_norm(stationary_residual(q, s1, s2, tol));
    } catch (const GeometryError&) {
    }
    out.push_back(make_check("stationarity", residual, kResidualTolerance));

    if (oracle) {
        out.push_back(make_check("oracle_objective", std::abs(oracle->objective - d), kOracleObjectiveTolerance * scale));
        const double gap = std::max(pairwise_distance(oracle->s1, s1), pairwise_distance(oracle->s2, s2));
        out.push_back(make_check("oracle_points", gap, kOraclePointTolerance * scale));
    }
    return out;
}

IdentityCheck check_gap_identity(const Quad& q, const Smt4Result& res, const Tolerance& tol) {
    const double scale = q.scale();
    const double inner = dot(q[2] - q[0], q[3] - q[1]);
    if (!res.length_gap_sq) return {"topology_gap", 0.0, 0.0, true};
    return make_check("topology_gap", std::abs(*res.length_gap_sq + 2.0 * inner), tol.eps_geom * scale * scale);
}

bool all_passed(const std::vector<IdentityCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

}  // namespace smt
