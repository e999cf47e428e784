#pragma once

#include <span>
#include <vector>

#include "smt/oracle.hpp"
#include "smt/steiner4.hpp"

namespace smt {

// Data-parallel drivers over many independent quads. Each kernel has an
// OpenMP version and a serial reference that must return identical results.

std::vector<Smt4Result> solve_smt4_batch(std::span<const Quad> quads, const Tolerance& tol = {});
std::vector<Smt4Result> solve_smt4_batch_serial(std::span<const Quad> quads, const Tolerance& tol = {});

/// The observer in cfg is ignored (it would be called concurrently).
std::vector<OracleResult> solve_numeric_batch(std::span<const Quad> quads, const OracleConfig& cfg = {});
std::vector<OracleResult> solve_numeric_batch_serial(std::span<const Quad> quads, const OracleConfig& cfg = {});

/// Threads available to the OpenMP kernels (1 without OpenMP).
int parallel_threads();

}  // namespace smt
