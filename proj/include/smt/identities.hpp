#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smt/oracle.hpp"
#include "smt/steiner4.hpp"

namespace smt {

/// One named consistency check: `value` is the measured discrepancy,
/// `limit` the bound it must not exceed.
struct IdentityCheck {
    std::string name;
    double value = 0.0;
    double limit = 0.0;
    bool passed = false;
};

inline constexpr double kAngleTolerance = 1e-9;      // radians
inline constexpr double kResidualTolerance = 1e-9;   // dimensionless
inline constexpr double kOracleObjectiveTolerance = 1e-6;  // times scale
inline constexpr double kOraclePointTolerance = 1e-5;      // times scale

/// Largest deviation from 2*pi/3 among the three angles at each junction of
/// the T12_34 tree with junctions (s1, s2).
double max_junction_angle_error(const Quad& q, const Point& s1, const Point& s2);

/// Checks for the T12_34 tree of `q` with junctions (s1, s2). Pass the
/// analytic junctions to test the formulas, or other points to test the
/// checker. `oracle` adds the numeric agreement checks.
std::vector<IdentityCheck> check_identities(const Quad& q, const Point& s1, const Point& s2, const Tolerance& tol,
                                            const std::optional<OracleResult>& oracle = std::nullopt);

/// d^2 - d~^2 against -2 <P1P3, P2P4>; only meaningful when both trees exist.
IdentityCheck check_gap_identity(const Quad& q, const Smt4Result& res, const Tolerance& tol);

bool all_passed(const std::vector<IdentityCheck>& checks);

}  // namespace smt
