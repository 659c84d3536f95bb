#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperads/params.hpp"
#include "hyperads/series.hpp"

namespace hyperads {

/// Wall closure of the parabolic reference solver.
enum class WallClosure {
    local,     // -dN/dz* = dsigma/dt* at the wall
    nonlocal,  // sigma from the global mass balance, as in the hyperbolic engine
};

struct ParabolicOptions {
    WallClosure closure = WallClosure::local;
    /// Time step as a fraction of h^2; must not exceed 1/2.
    double k_over_h2 = 0.4;
    std::vector<double> probes;
};

/// Explicit solver of dN/dt* = d2N/dz*2 coupled to backward-Euler kinetics,
/// ignoring p.B. Node fluxes are written in conservative (half-cell) form so
/// the discrete inventory is preserved exactly.
TimeSeries run_parabolic(const Params& p, const InitialCondition& ic, int n_z, double T,
                         const ParabolicOptions& opts = {});

struct ComparisonReport {
    Params params;
    std::string engine_a;
    std::string engine_b;
    double tolerance = 0.0;  // on max |delta sigma|
    double max_sigma_deviation = 0.0;
    double rms_sigma_deviation = 0.0;
    double max_probe_deviation = 0.0;  // over probes present in both series
    double max_conservation_a = 0.0;
    double max_conservation_b = 0.0;
    std::size_t samples = 0;
    bool pass = false;
};

/// Deviations of two series on a common time grid (linear interpolation).
/// Throws InvalidInput when the grid leaves either series' time range.
ComparisonReport compare_engines(const TimeSeries& a, const TimeSeries& b, std::span<const double> tgrid,
                                 double tolerance);

/// Backward-difference residual of A dsigma/dt* = L N_s - sigma, one entry per
/// step after the first.
std::vector<double> audit_kinetics(const TimeSeries& series, const Params& p);

/// |2 trapezoid(row) + 2 sigma - inventory| for every stored profile.
std::vector<double> audit_conservation(const TimeSeries& series);

/// Uniform grid of n points on [t0, t1].
std::vector<double> uniform_grid(double t0, double t1, std::size_t n);

/// Time of the first sample after which the signal drops by more than `drop`
/// below its running maximum, restricted to [t_begin, t_end]. Empty when the
/// signal never turns down by more than `drop`.
std::optional<double> first_local_maximum(const std::vector<double>& times, const std::vector<double>& values,
                                          double t_begin, double t_end, double drop);

}  // namespace hyperads
