#include "smt/steiner4.hpp"

#include <cmath>
#include <numbers>

#include "smt/fermat3.hpp"

namespace smt {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kPi = std::numbers::pi;

std::string join_names(const std::vector<DeltaName>& names) {
    std::string out;
    for (const auto n : names) {
        if (!out.empty()) out += ", ";
        out += to_string(n);
    }
    return out;
}

FullTree tree_from_scratch(const Quad& q, const Scratch4& s) {
    const double c = 0.5 * kSqrt3 / s.t_quad;
    const double root = std::sqrt(s.t_quad);  // sqrt(3) d

    FullTree t;
    t.topology = Topology::T12_34;
    t.s1 = Point(q[0].x() - c * s.delta1 * s.tau1, q[0].y() - c * s.delta1 * s.eta1);
    t.s2 = Point(q[2].x() + c * s.delta3 * s.tau1, q[2].y() + c * s.delta3 * s.eta1);
    t.edge_lengths = {s.delta1 / root, s.delta2 / root, s.delta3 / root, s.delta4 / root, s.delta / root};
    t.length = std::sqrt(s.t_quad / 3.0);
    return t;
}

}  // namespace

std::string to_string(DeltaName d) {
    switch (d) {
        case DeltaName::Delta: return "delta";
        case DeltaName::Delta1: return "delta1";
        case DeltaName::Delta2: return "delta2";
        case DeltaName::Delta3: return "delta3";
        case DeltaName::Delta4: return "delta4";
    }
    return "unknown";
}

std::string to_string(Topology t) { return t == Topology::T12_34 ? "T12_34" : "T41_23"; }

Scratch4 scratch(const Quad& q) {
    const double x1 = q[0].x(), y1 = q[0].y();
    const double x2 = q[1].x(), y2 = q[1].y();
    const double x3 = q[2].x(), y3 = q[2].y();
    const double x4 = q[3].x(), y4 = q[3].y();

    Scratch4 s;
    s.tau1 = 2.0 * x1 - x2 - 2.0 * x3 + x4 + kSqrt3 * (y2 - y4);
    s.tau2 = -x1 + 2.0 * x2 + x3 - 2.0 * x4 + kSqrt3 * (y3 - y1);
    s.eta1 = -(s.tau1 + 2.0 * s.tau2) / kSqrt3;
    s.eta2 = (2.0 * s.tau1 + s.tau2) / kSqrt3;

    s.delta = -(x1 - x3) * s.eta1 + (y1 - y3) * s.tau1;
    s.delta1 = (x1 - x2) * s.eta2 - (y1 - y2) * s.tau2;
    s.delta2 = (x1 - x2) * s.eta1 - (y1 - y2) * s.tau1;
    s.delta3 = -(x3 - x4) * s.eta2 + (y3 - y4) * s.tau2;
    s.delta4 = -(x3 - x4) * s.eta1 + (y3 - y4) * s.tau1;
    s.t_quad = s.tau1 * s.tau1 + s.tau1 * s.tau2 + s.tau2 * s.tau2;
    return s;
}

Existence existence(const Scratch4& s, double scale, const Tolerance& tol) {
    const double thr = tol.eps_geom * scale * scale;
    Existence e;
    const std::array<std::pair<DeltaName, double>, 5> all{{
        {DeltaName::Delta, s.delta},
        {DeltaName::Delta1, s.delta1},
        {DeltaName::Delta2, s.delta2},
        {DeltaName::Delta3, s.delta3},
        {DeltaName::Delta4, s.delta4},
    }};
    for (const auto& [name, value] : all) {
        if (!(value > thr)) e.failing.push_back(name);
    }
    return e;
}

Existence existence(const Quad& q, const Tolerance& tol) { return existence(scratch(q), q.scale(), tol); }

NoFullTree::NoFullTree(Topology topology, std::vector<DeltaName> failing)
    : std::runtime_error("no full Steiner tree of topology " + to_string(topology) +
                         " (non-positive: " + join_names(failing) + ")"),
      topology_(topology),
      failing_(std::move(failing)) {}

FullTree solve_topology(const Quad& q, const Tolerance& tol) {
    const Scratch4 s = scratch(q);
    auto e = existence(s, q.scale(), tol);
    if (!e.exists()) throw NoFullTree(Topology::T12_34, std::move(e.failing));
    return tree_from_scratch(q, s);
}

Point s1_anchored_at_p2(const Quad& q, const Scratch4& s) {
    const double c = 0.5 * kSqrt3 / s.t_quad;
    return {q[1].x() - c * s.delta2 * s.tau2, q[1].y() - c * s.delta2 * s.eta2};
}

std::array<double, 4> s1_containment_areas(const Scratch4& s) {
    const double c = 0.5 * kSqrt3 / s.t_quad;
    return {
        c * s.delta1 * s.delta2,
        c * (s.delta * s.delta2 + s.delta2 * s.delta3),
        c * (s.delta3 * s.delta4 + s.delta3 * s.delta + s.delta4 * s.delta),
        c * (s.delta * s.delta1 + s.delta1 * s.delta4),
    };
}

FullTree solve_alternate(const Quad& q, const Tolerance& tol) {
    const Quad r = q.rotated();
    const Scratch4 s = scratch(r);
    auto e = existence(s, r.scale(), tol);
    if (!e.exists()) throw NoFullTree(Topology::T41_23, std::move(e.failing));
    const FullTree rt = tree_from_scratch(r, s);

    // In the relabeled quad, S1 joins (P2,P3) and S2 joins (P4,P1).
    FullTree t;
    t.topology = Topology::T41_23;
    t.s1 = rt.s2;
    t.s2 = rt.s1;
    t.s1_terminals = {3, 0};
    t.s2_terminals = {1, 2};
    t.edge_lengths = {rt.edge_lengths[2], rt.edge_lengths[3], rt.edge_lengths[0], rt.edge_lengths[1],
                      rt.edge_lengths[4]};
    t.length = rt.length;
    return t;
}

Smt4Result solve_smt4(const Quad& q, const Tolerance& tol) {
    Smt4Result res;
    std::optional<FullTree> primary;
    std::optional<FullTree> alt;
    try {
        primary = solve_topology(q, tol);
    } catch (const NoFullTree& e) {
        res.primary_failing = e.failing();
    }
    try {
        alt = solve_alternate(q, tol);
    } catch (const NoFullTree& e) {
        res.alternate_failing = e.failing();
    }

    if (primary && alt) {
        const double scale = q.scale();
        const double gap = primary->length * primary->length - alt->length * alt->length;
        res.length_gap_sq = gap;
        res.tie = std::abs(gap) <= tol.eps_geom * scale * scale;
        if (res.tie || gap < 0.0) {
            res.chosen = std::move(primary);
            res.alternate = std::move(alt);
        } else {
            res.chosen = std::move(alt);
            res.alternate = std::move(primary);
        }
    } else if (primary) {
        res.chosen = std::move(primary);
    } else if (alt) {
        res.chosen = std::move(alt);
    }
    return res;
}

double length_via_diagonals(const Quad& q) {
    const double r13 = pairwise_distance(q[0], q[2]);
    const double r24 = pairwise_distance(q[1], q[3]);
    const double psi = diagonal_angle(q);
    return std::sqrt(r13 * r13 + r24 * r24 + 2.0 * r13 * r24 * std::cos(2.0 * kPi / 3.0 - psi));
}

double length_via_law_of_cosines(const Quad& q) {
    const double r13 = pairwise_distance(q[0], q[2]);
    const double r24 = pairwise_distance(q[1], q[3]);
    const double psi = diagonal_angle(q);
    return std::sqrt(r13 * r13 + r24 * r24 - 2.0 * r13 * r24 * std::cos(psi + kPi / 3.0));
}

double length_via_ab(const Quad& q) {
    const double x1 = q[0].x(), y1 = q[0].y();
    const double x2 = q[1].x(), y2 = q[1].y();
    const double x3 = q[2].x(), y3 = q[2].y();
    const double x4 = q[3].x(), y4 = q[3].y();
    const double a = kSqrt3 * (x1 - x2 - x3 + x4) + (y1 + y2 - y3 - y4);
    const double b = (x1 + x2 - x3 - x4) + kSqrt3 * (-y1 + y2 + y3 - y4);
    return 0.5 * std::sqrt(a * a + b * b);
}

std::pair<Point, Point> q_points(const Quad& q) {
    return {equilateral_apex(q[0], q[1]), equilateral_apex(q[2], q[3])};
}

}  // namespace smt
