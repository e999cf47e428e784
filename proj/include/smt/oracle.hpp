#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "smt/geometry.hpp"

namespace smt {

// Independent numeric route to the junction points: Weiszfeld-style
// majorize-minimize steps on the five-edge objective of topology T12_34,
// both junctions at once.
// Nothing here uses the closed-form solver.

enum class OracleInit { DiagonalIntersection, Centroids, Explicit };

struct OracleConfig {
    std::size_t max_iters = 100000;
    Tolerance tol;
    OracleInit init = OracleInit::DiagonalIntersection;
    Point s1_init;  // Explicit only
    Point s2_init;  // Explicit only
    /// Called after every sweep with (iteration, objective). Test hook.
    std::function<void(std::size_t, double)> observer;
};

struct OracleResult {
    Point s1;
    Point s2;
    double objective = 0.0;
    double residual_inf = 0.0;
    std::size_t iters = 0;
    bool converged = false;
};

/// Residual bound certifying a stationary point (the residual is a sum of
/// unit vectors, so it is dimensionless).
inline constexpr double kOracleResidualLimit = 1e-6;

/// |S1P1| + |S1P2| + |S1S2| + |S2P3| + |S2P4|.
double objective(const Quad& q, const Point& s1, const Point& s2);

/// Left-hand sides of the stationarity system, i.e. the gradient of
/// objective() with respect to (x1*, y1*, x2*, y2*). Throws
/// GeometryError(CoincidentPoints) if a denominator is below eps_solve*scale.
std::array<double, 4> stationary_residual(const Quad& q, const Point& s1, const Point& s2, const Tolerance& tol = {});

double max_norm(std::span<const double> v);

OracleResult solve_numeric(const Quad& q, const OracleConfig& cfg = {});

/// Single-junction variant for three terminals.
struct Oracle3Result {
    Point steiner;
    double objective = 0.0;
    std::size_t iters = 0;
    bool converged = false;
};

Oracle3Result solve_numeric3(const Triangle& t, const OracleConfig& cfg = {});

}  // namespace smt
