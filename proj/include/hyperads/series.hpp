#pragma once

#include <cstddef>
#include <vector>

namespace hyperads {

/// Engine-agnostic output: surface density, the bulk density in front of the
/// wall, probe densities and optionally thinned half-slab profiles.
struct TimeSeries {
    std::vector<double> times;
    std::vector<double> sigma;
    std::vector<double> surface;                // N(1/2, t*)
    std::vector<double> conservation_residual;  // |int N + 2 sigma - inventory|

    std::vector<double> probe_z;
    std::vector<std::vector<double>> probe_values;  // [probe][time]

    std::vector<double> profile_z;  // nodes on [0, 1/2]
    std::vector<double> profile_times;
    std::vector<std::vector<double>> profiles;  // [row][node]

    /// Total used as reference for conservation residuals. Equals N0 for the
    /// closed-form engines and the discrete initial mass for grid engines.
    double inventory = 0.0;

    std::size_t size() const noexcept { return times.size(); }

    /// Keeps every stride-th sample plus the last one. Profiles are untouched.
    TimeSeries thinned(std::size_t stride) const;

    /// Linear interpolation of sigma at t (clamped to the series range).
    double sigma_at(double t) const;
    double probe_at(std::size_t probe, double t) const;
};

/// Interpolation helper shared by the comparison tooling.
double interpolate(const std::vector<double>& x, const std::vector<double>& y, double at);

}  // namespace hyperads
