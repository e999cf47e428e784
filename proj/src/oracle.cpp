#include "smt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace smt {

namespace {

struct Vec {
    double x;
    double y;
};

Vec vec(const Point& p) { return {p.x(), p.y()}; }

double dist(Vec a, Vec b) { return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y)); }

// One modified Weiszfeld step toward the neighbors `nb` (Vardi-Zhang): a
// neighbor within `guard` of the iterate contributes no weight, and the
// iterate leaves it only when the pull of the others exceeds one.
template <std::size_t N>
Vec weiszfeld_step(Vec s, const std::array<Vec, N>& nb, double guard) {
    double wsum = 0.0;
    Vec acc{0.0, 0.0};
    Vec pull{0.0, 0.0};
    double eta = 0.0;
    for (const Vec& n : nb) {
        const double d = dist(s, n);
        if (d <= guard) {
            eta += 1.0;
            continue;
        }
        wsum += 1.0 / d;
        acc.x += n.x / d;
        acc.y += n.y / d;
        pull.x += (n.x - s.x) / d;
        pull.y += (n.y - s.y) / d;
    }
    if (wsum == 0.0) return s;
    const Vec t{acc.x / wsum, acc.y / wsum};
    if (eta == 0.0) return t;
    const double r = std::sqrt(pull.x * pull.x + pull.y * pull.y);
    if (r <= eta) return s;
    const double k = eta / r;
    return {(1.0 - k) * t.x + k * s.x, (1.0 - k) * t.y + k * s.y};
}

// Joint step: minimize the quadratic majorizer sum w_e |a - b|^2 with
// w_e = 1/|a - b| at the current iterate, over both junctions at once. Each
// coordinate gives a 2x2 system; the objective never increases.
std::pair<Vec, Vec> joint_step(Vec s1, Vec s2, Vec p1, Vec p2, Vec p3, Vec p4) {
    const double w1 = 1.0 / dist(s1, p1);
    const double w2 = 1.0 / dist(s1, p2);
    const double w3 = 1.0 / dist(s2, p3);
    const double w4 = 1.0 / dist(s2, p4);
    const double w = 1.0 / dist(s1, s2);
    const double a = w1 + w2 + w;
    const double b = w3 + w4 + w;
    const double det = a * b - w * w;
    const Vec r1{w1 * p1.x + w2 * p2.x, w1 * p1.y + w2 * p2.y};
    const Vec r2{w3 * p3.x + w4 * p4.x, w3 * p3.y + w4 * p4.y};
    return {{(b * r1.x + w * r2.x) / det, (b * r1.y + w * r2.y) / det},
            {(w * r1.x + a * r2.x) / det, (w * r1.y + a * r2.y) / det}};
}

std::pair<Vec, Vec> initial_points(const Quad& q, const OracleConfig& cfg) {
    const Vec p1 = vec(q[0]), p2 = vec(q[1]), p3 = vec(q[2]), p4 = vec(q[3]);
    switch (cfg.init) {
        case OracleInit::Explicit:
            return {vec(cfg.s1_init), vec(cfg.s2_init)};
        case OracleInit::Centroids: {
            const Vec c{(p1.x + p2.x + p3.x + p4.x) / 4.0, (p1.y + p2.y + p3.y + p4.y) / 4.0};
            return {{(p1.x + p2.x + c.x) / 3.0, (p1.y + p2.y + c.y) / 3.0},
                    {(p3.x + p4.x + c.x) / 3.0, (p3.y + p4.y + c.y) / 3.0}};
        }
        case OracleInit::DiagonalIntersection:
            break;
    }
    // Diagonals P1P3 and P2P4 cross inside a convex quad.
    const Point d13 = q[2] - q[0];
    const Point d24 = q[3] - q[1];
    const double t = cross(q[1] - q[0], d24) / cross(d13, d24);
    const Vec x{p1.x + t * d13.x(), p1.y + t * d13.y()};
    // Bisector of the diagonal angle facing the side P1P2.
    const double l1 = dist(x, p1);
    const double l2 = dist(x, p2);
    Vec u{(p1.x - x.x) / l1 + (p2.x - x.x) / l2, (p1.y - x.y) / l1 + (p2.y - x.y) / l2};
    const double ul = std::sqrt(u.x * u.x + u.y * u.y);
    u = {u.x / ul, u.y / ul};
    const double h = 0.05 * q.scale();
    return {{x.x + h * u.x, x.y + h * u.y}, {x.x - h * u.x, x.y - h * u.y}};
}

}  // namespace

double objective(const Quad& q, const Point& s1, const Point& s2) {
    return pairwise_distance(s1, q[0]) + pairwise_distance(s1, q[1]) + pairwise_distance(s1, s2) +
           pairwise_distance(s2, q[2]) + pairwise_distance(s2, q[3]);
}

std::array<double, 4> stationary_residual(const Quad& q, const Point& s1, const Point& s2, const Tolerance& tol) {
    const double guard = tol.eps_solve * q.scale();
    const double d11 = pairwise_distance(s1, q[0]);
    const double d12 = pairwise_distance(s1, q[1]);
    const double d23 = pairwise_distance(s2, q[2]);
    const double d24 = pairwise_distance(s2, q[3]);
    const double d_ss = pairwise_distance(s1, s2);
    if (std::min({d11, d12, d23, d24, d_ss}) <= guard) {
        throw GeometryError(GeometryErrorKind::CoincidentPoints,
                            "stationarity residual undefined: a junction coincides with a neighbor");
    }
    return {
        (s1.x() - q[0].x()) / d11 + (s1.x() - q[1].x()) / d12 + (s1.x() - s2.x()) / d_ss,
        (s1.y() - q[0].y()) / d11 + (s1.y() - q[1].y()) / d12 + (s1.y() - s2.y()) / d_ss,
        (s2.x() - q[2].x()) / d23 + (s2.x() - q[3].x()) / d24 + (s2.x() - s1.x()) / d_ss,
        (s2.y() - q[2].y()) / d23 + (s2.y() - q[3].y()) / d24 + (s2.y() - s1.y()) / d_ss,
    };
}

double max_norm(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

OracleResult solve_numeric(const Quad& q, const OracleConfig& cfg) {
    const double scale = q.scale();
    const double guard = cfg.tol.eps_solve * scale;
    const Vec p1 = vec(q[0]), p2 = vec(q[1]), p3 = vec(q[2]), p4 = vec(q[3]);
    auto [s1, s2] = initial_points(q, cfg);

    bool stopped = false;
    std::size_t it = 0;
    while (it < cfg.max_iters) {
        ++it;
        Vec m1;
        Vec n2;
        const double closest = std::min({dist(s1, p1), dist(s1, p2), dist(s1, s2), dist(s2, p3), dist(s2, p4)});
        if (closest > guard) {
            std::tie(m1, n2) = joint_step(s1, s2, p1, p2, p3, p4);
        } else {
            // Some weight is unbounded: per-junction steps that can leave a
            // coincident neighbor.
            m1 = weiszfeld_step(s1, std::array{p1, p2, s2}, guard);
            n2 = weiszfeld_step(s2, std::array{p3, p4, m1}, guard);
            // A merged pair that should stay merged moves as one point.
            if (dist(m1, n2) <= guard) {
                m1 = weiszfeld_step(m1, std::array{p1, p2, p3, p4}, guard);
                n2 = m1;
            }
        }
        const double step = std::max({std::abs(m1.x - s1.x), std::abs(m1.y - s1.y), std::abs(n2.x - s2.x),
                                      std::abs(n2.y - s2.y)});
        s1 = m1;
        s2 = n2;
        if (cfg.observer) cfg.observer(it, objective(q, Point(s1.x, s1.y), Point(s2.x, s2.y)));
        if (step <= guard) {
            stopped = true;
            break;
        }
    }

    OracleResult out;
    out.s1 = Point(s1.x, s1.y);
    out.s2 = Point(s2.x, s2.y);
    out.objective = objective(q, out.s1, out.s2);
    out.iters = it;
    try {
        const auto r = stationary_residual(q, out.s1, out.s2, cfg.tol);
        out.residual_inf = max_norm(r);
    } catch (const GeometryError&) {
        out.residual_inf = std::numeric_limits<double>::infinity();
    }
    out.converged = stopped && out.residual_inf <= kOracleResidualLimit;
    return out;
}

Oracle3Result solve_numeric3(const Triangle& t, const OracleConfig& cfg) {
    const double scale = t.scale();
    const double guard = cfg.tol.eps_solve * scale;
    const std::array<Vec, 3> nb{vec(t[0]), vec(t[1]), vec(t[2])};
    const auto f = [&](Vec s) { return dist(s, nb[0]) + dist(s, nb[1]) + dist(s, nb[2]); };

    Vec s = cfg.init == OracleInit::Explicit
                ? vec(cfg.s1_init)
                : Vec{(nb[0].x + nb[1].x + nb[2].x) / 3.0, (nb[0].y + nb[1].y + nb[2].y) / 3.0};
    Oracle3Result out;
    // A vertex is the optimum iff the unit vectors toward the other two
    // terminals sum to at most one in length.
    for (std::size_t j = 0; j < 3; ++j) {
        Vec pull{0.0, 0.0};
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == j) continue;
            const double d = dist(nb[i], nb[j]);
            pull.x += (nb[i].x - nb[j].x) / d;
            pull.y += (nb[i].y - nb[j].y) / d;
        }
        if (std::sqrt(pull.x * pull.x + pull.y * pull.y) <= 1.0) {
            out.steiner = t[j];
            out.objective = f(nb[j]);
            out.converged = true;
            return out;
        }
    }

    std::size_t it = 0;
    while (it < cfg.max_iters) {
        ++it;
        const Vec n = weiszfeld_step(s, nb, guard);
        const double step = std::max(std::abs(n.x - s.x), std::abs(n.y - s.y));
        s = n;
        if (cfg.observer) cfg.observer(it, f(s));
        if (step <= guard) {
            out.converged = true;
            break;
        }
    }
    out.steiner = Point(s.x, s.y);
    out.objective = f(s);
    out.iters = it;
    return out;
}

}  // namespace smt
