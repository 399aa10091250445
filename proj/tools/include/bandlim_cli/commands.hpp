#pragma once

#include <bandlim_cli/run_config.hpp>

#include <ostream>

namespace bandlim::cli {

inline constexpr double kSeamTolerance = 1e-9;

/// Coefficient table with the pairwise differences and the |k|^2.49 decay
/// diagnostics over the window of half-width max(L).
void cmd_coeffs(const RunConfig& config, std::ostream& out);

/// Truncation error table, one row per (method, L).
void cmd_sweep(const RunConfig& config, std::ostream& out);

/// Seam residuals over tau = i / points, i = 0..points-1. Returns false when
/// any residual reaches kSeamTolerance.
bool cmd_seams(const RunConfig& config, std::ostream& out);

/// Reconstructed values only, one row per (method, L).
void cmd_interp(const RunConfig& config, std::ostream& out);

/// printf("%.17g").
std::string format_real(double value);

}  // namespace bandlim::cli
