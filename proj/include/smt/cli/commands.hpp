#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "smt/geometry.hpp"

namespace smt::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 2,
    kExitNoFullTree = 3,
    kExitVerificationFailed = 4,
};

/// Runs the `smt` command line. `args` excludes the program name. The
/// report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Normalized {
    std::array<Point, 4> points;
    /// points[i] is input terminal permutation[i] (0-based).
    std::array<std::size_t, 4> permutation;
};

/// Counterclockwise convex-hull order starting at the lexicographically
/// smallest terminal. Throws GeometryError when no convex order exists.
Normalized normalize_ccw(const std::array<Point, 4>& pts, const Tolerance& tol = {});

}  // namespace smt::cli
