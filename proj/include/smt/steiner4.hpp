#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smt/geometry.hpp"

namespace smt {

/// Intermediate quantities of the closed-form four-terminal solution for the
/// topology {P1,P2}-S1-S2-{P3,P4}. Lengths for tau/eta, squared lengths for
/// the deltas and t_quad.
struct Scratch4 {
    double tau1 = 0.0;
    double tau2 = 0.0;
    double eta1 = 0.0;
    double eta2 = 0.0;
    double delta = 0.0;
    double delta1 = 0.0;
    double delta2 = 0.0;
    double delta3 = 0.0;
    double delta4 = 0.0;
    double t_quad = 0.0;  // tau1^2 + tau1*tau2 + tau2^2 = 3 d^2
};

Scratch4 scratch(const Quad& q);

enum class DeltaName { Delta, Delta1, Delta2, Delta3, Delta4 };

std::string to_string(DeltaName d);

/// Outcome of the positivity test on the five deltas; `failing` lists every
/// delta not exceeding eps_geom * scale^2.
struct Existence {
    std::vector<DeltaName> failing;
    bool exists() const { return failing.empty(); }
};

Existence existence(const Quad& q, const Tolerance& tol = {});
Existence existence(const Scratch4& s, double scale, const Tolerance& tol = {});

enum class Topology {
    T12_34,  // P1,P2 on S1; P3,P4 on S2
    T41_23,  // P4,P1 on S1; P2,P3 on S2
};

std::string to_string(Topology t);

/// A full Steiner tree with two junctions.
///
/// edge_lengths holds |T_a S1|, |T_b S1|, |T_c S2|, |T_d S2|, |S1 S2| where
/// (T_a, T_b) = s1_terminals and (T_c, T_d) = s2_terminals (0-based indices
/// into the quad). For T12_34 that is |P1S1|, |P2S1|, |P3S2|, |P4S2|, |S1S2|.
struct FullTree {
    Topology topology = Topology::T12_34;
    Point s1;
    Point s2;
    std::array<std::size_t, 2> s1_terminals{0, 1};
    std::array<std::size_t, 2> s2_terminals{2, 3};
    std::array<double, 5> edge_lengths{};
    double length = 0.0;
};

class NoFullTree : public std::runtime_error {
public:
    NoFullTree(Topology topology, std::vector<DeltaName> failing);

    Topology topology() const { return topology_; }
    const std::vector<DeltaName>& failing() const { return failing_; }

private:
    Topology topology_;
    std::vector<DeltaName> failing_;
};

/// Tree of topology T12_34. Throws NoFullTree when a delta is not positive.
FullTree solve_topology(const Quad& q, const Tolerance& tol = {});

/// S1 evaluated from the representation anchored at P2 instead of P1.
Point s1_anchored_at_p2(const Quad& q, const Scratch4& s);

/// Closed-form values of the doubled signed areas of (P1,P2,S1), (P2,P3,S1),
/// (P3,P4,S1), (P4,P1,S1). All positive iff S1 lies inside the quad.
std::array<double, 4> s1_containment_areas(const Scratch4& s);

/// Tree of topology T41_23, obtained by relabeling (P2,P3,P4,P1) and solving.
FullTree solve_alternate(const Quad& q, const Tolerance& tol = {});

/// Both topologies compared. `chosen` is empty when neither exists.
struct Smt4Result {
    std::optional<FullTree> chosen;
    std::optional<FullTree> alternate;
    bool tie = false;
    std::optional<double> length_gap_sq;  // d(T12_34)^2 - d(T41_23)^2, both trees present
    std::vector<DeltaName> primary_failing;
    std::vector<DeltaName> alternate_failing;

    bool has_full_tree() const { return chosen.has_value(); }
};

Smt4Result solve_smt4(const Quad& q, const Tolerance& tol = {});

/// sqrt(r13^2 + r24^2 + 2 r13 r24 cos(2pi/3 - psi)).
double length_via_diagonals(const Quad& q);

/// sqrt(r13^2 + r24^2 - 2 r13 r24 cos(psi + pi/3)): the third side of the
/// triangle on the two diagonals with included angle psi + pi/3.
double length_via_law_of_cosines(const Quad& q);

/// (1/2) sqrt(A^2 + B^2) with A, B expanded directly in the coordinates.
double length_via_ab(const Quad& q);

/// Equilateral apexes erected outward on P1P2 and P3P4. |q1 q2| = d.
std::pair<Point, Point> q_points(const Quad& q);

}  // namespace smt
