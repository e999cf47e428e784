#include "smt/batch.hpp"

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace smt {

std::vector<Smt4Result> solve_smt4_batch(std::span<const Quad> quads, const Tolerance& tol) {
    std::vector<Smt4Result> out(quads.size());
    const auto n = static_cast<std::ptrdiff_t>(quads.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = solve_smt4(quads[k], tol);
    }
    return out;
}

std::vector<Smt4Result> solve_smt4_batch_serial(std::span<const Quad> quads, const Tolerance& tol) {
    std::vector<Smt4Result> out;
    out.reserve(quads.size());
    for (const Quad& q : quads) out.push_back(solve_smt4(q, tol));
    return out;
}

std::vector<OracleResult> solve_numeric_batch(std::span<const Quad> quads, const OracleConfig& cfg) {
    OracleConfig local = cfg;
    local.observer = nullptr;
    std::vector<OracleResult> out(quads.size());
    const auto n = static_cast<std::ptrdiff_t>(quads.size());
    // Iteration counts vary a lot between quads.
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = solve_numeric(quads[k], local);
    }
    return out;
}

std::vector<OracleResult> solve_numeric_batch_serial(std::span<const Quad> quads, const OracleConfig& cfg) {
    OracleConfig local = cfg;
    local.observer = nullptr;
    std::vector<OracleResult> out;
    out.reserve(quads.size());
    for (const Quad& q : quads) out.push_back(solve_numeric(q, local));
    return out;
}

int parallel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace smt
