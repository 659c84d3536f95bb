#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperads/params.hpp"
#include "hyperads/series.hpp"

namespace hyperads {

/// Uniform grid on the half slab [0, 1/2] x [0, T]. Node 0 is the symmetry
/// plane, node n_z the wall.
struct Grid {
    int n_z = 0;
    long n_t = 0;
    double T = 0.0;
    double h = 0.0;
    double k = 0.0;
    double lambda = 0.0;

    /// Picks n_t so that k/h does not exceed `lambda`.
    static Grid from_lambda(int n_z, double lambda, double T);
    static Grid from_steps(int n_z, long n_t, double T);

    std::vector<double> nodes() const;
};

/// 0.5 sqrt(B), which keeps lambda below 2.5e-2 whenever B <= 1e-3.
double default_lambda(const Params& p);

/// Composite trapezoid over a uniform row with spacing h.
double trapezoid(std::span<const double> row, double h) noexcept;

/// First time level from N(z,0) and dN/dt(z,0) = g (interior nodes only).
void step_first(std::span<const double> row0, std::span<const double> g, std::span<double> row1,
                const Grid& grid, double B);

/// Three-level update of the interior nodes 1..size-2 from the two previous rows.
void step_interior(std::span<const double> prev, std::span<const double> prev2, std::span<double> out,
                   const Grid& grid, double B);

/// Zero gradient at z* = 0: row[0] = row[1].
void apply_symmetry(std::span<double> row) noexcept;

struct SurfaceUpdate {
    double density;  // N at the wall
    double sigma;
};

/// Closes a row at the wall. sigma = inventory/2 - trapezoid(row) is the
/// half-slab mass balance and A (sigma - sigma_prev)/k = L N_s - sigma the
/// backward-Euler kinetics; both are linear in N_s, which is written into
/// row.back().
SurfaceUpdate apply_surface(std::span<double> row, double sigma_prev, const Grid& grid, const Params& p,
                            double inventory);

struct FdmOptions {
    /// Initial dN/dt on the grid nodes; empty means zero (the regular solution).
    std::vector<double> initial_rate;
    /// Upper bound on lambda; 0 selects the wave-equation limit sqrt(B).
    double max_lambda = 0.0;
    std::vector<double> probes;
    /// Store a full row every `profile_stride` steps (0 = none).
    std::size_t profile_stride = 0;
    /// |N| beyond blowup_factor * N0 counts as an instability.
    double blowup_factor = 1e8;
};

struct FdmResult {
    TimeSeries series;
    Grid grid;
    double max_conservation_residual = 0.0;
    /// int g dz + 2 (L/A) N_s(0); zero for a compatible initial rate.
    double compatibility_residual = 0.0;
    bool regular_initial_rate = true;
};

FdmResult run_fdm(const Params& p, const InitialCondition& ic, const Grid& grid, const FdmOptions& opts = {});

}  // namespace hyperads
