#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "hyperads/eigen.hpp"
#include "hyperads/params.hpp"
#include "hyperads/series.hpp"

namespace hyperads {

/// Inner product of cos(a z*) and cos(b z*) over [-1/2, 1/2]. Continuous in
/// a - b, so the diagonal 1/2 + sin(a)/(2a) needs no special case.
double gram_entry(double alpha_a, double alpha_b) noexcept;

Eigen::MatrixXd gram_matrix(std::span<const double> alphas);

/// psi_q = sum_{a <= q} coeff(a, q) phi_a with coeff(q, q) = 1, pairwise
/// orthogonal over the slab.
struct OrthoBasis {
    Eigen::MatrixXd coeff;
    Eigen::VectorXd norm2;  // (psi_q, psi_q)
    double gram_condition = 0.0;
    double orthogonality_residual = 0.0;  // max |(psi_i, psi_j)| / (|psi_i| |psi_j|), i != j
};

/// Modified Gram-Schmidt on the exact Gram matrix. Throws DegenerateBasis when
/// the Gram condition number exceeds 1e12.
OrthoBasis orthogonalize(std::span<const double> alphas);

/// Same basis from ratios of signed minors of the leading Gram determinants.
/// Cost grows like n^4 determinants; meant as a cross-check for small n.
OrthoBasis orthogonalize_by_minors(std::span<const double> alphas);

struct Projection {
    Eigen::VectorXd R;  // coordinates on psi
    Eigen::VectorXd C;  // coordinates on phi: C = coeff * R
    double residual_norm = 0.0;  // L2 norm of (N(z,0) - N_eq) - sum C phi
};

/// Expands N(z*,0) - N_eq on the cosine modes via the orthogonal basis.
Projection project_initial(const InitialCondition& ic, const OrthoBasis& basis,
                           std::span<const double> alphas, const Params& p);

struct Amplitude {
    std::complex<double> S1;
    std::complex<double> S2;
};

/// S1 = C/(1 - mu1/mu2), S2 = -(mu1/mu2) S1: zero initial velocity per mode.
std::vector<Amplitude> amplitudes(std::span<const double> C, std::span<const Mode> modes);

struct SpectralDiagnostics {
    double gram_condition = 0.0;
    double orthogonality_residual = 0.0;
    double reconstruction_error = 0.0;  // L2 of the truncated initial expansion
    double initial_sigma = 0.0;         // sigma(0), zero for an infinite series
    double max_imag_residue = 0.0;      // over the checks run at solve time
};

class SpectralSolution {
public:
    SpectralSolution(Params p, std::vector<Mode> modes, std::vector<double> C,
                     std::vector<Amplitude> amps, SpectralDiagnostics diag);

    const Params& params() const noexcept { return params_; }
    const Equilibrium& equilibrium_state() const noexcept { return eq_; }
    const std::vector<Mode>& modes() const noexcept { return modes_; }
    const std::vector<double>& projection() const noexcept { return C_; }
    const std::vector<Amplitude>& amplitudes() const noexcept { return amps_; }
    const SpectralDiagnostics& diagnostics() const noexcept { return diag_; }

    /// N(z*, t*) with the imaginary residue of the complex sum.
    std::complex<double> density_complex(double z, double t) const;
    double density(double z, double t) const { return density_complex(z, t).real(); }
    double density_rate(double z, double t) const;

    std::complex<double> sigma_complex(double t) const;
    double sigma(double t) const { return sigma_complex(t).real(); }
    double sigma_rate(double t) const;

    /// int N dz* + 2 sigma - N0 using the closed-form mode integrals.
    double mass_residual(double t) const;
    /// A dsigma/dt* - L N(1/2, t*) + sigma: nonzero because the modes solve
    /// only the real part of the eigenvalue equation.
    double kinetic_residual(double t) const;

private:
    Params params_;
    Equilibrium eq_;
    std::vector<Mode> modes_;
    std::vector<double> C_;
    std::vector<Amplitude> amps_;
    SpectralDiagnostics diag_;
};

/// eigenvalues -> orthogonal basis -> projection -> amplitudes.
SpectralSolution solve_spectral(const Params& p, const InitialCondition& ic, int mode_count = 50);

/// Samples a solution on a time grid. profile_nodes > 0 adds half-slab rows at
/// every `profile_stride`-th time.
TimeSeries sample_series(const SpectralSolution& sol, std::span<const double> times,
                         std::span<const double> probes, int profile_nodes = 0,
                         std::size_t profile_stride = 1);

}  // namespace hyperads
