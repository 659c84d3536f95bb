#pragma once

#include <span>
#include <vector>

namespace hyperads {

/// Dimensional description of the slab. Units are SI; only ratios matter.
struct PhysicalInputs {
    double d = 1.0;      // slab thickness [m]
    double D = 1.0;      // diffusion coefficient [m^2/s]
    double tau_r = 0.0;  // relaxation time of the flux [s]
    double tau_a = 1.0;  // desorption time [s]
    double k_a = 1.0;    // adsorption rate coefficient [m/s]
    double n0 = 1.0;     // initial bulk density [1/m^3]
};

/// Dimensionless groups. Time is measured in units of the diffusion time d^2/D
/// and lengths in units of d.
struct Params {
    double A = 1.0;   // desorption time / diffusion time
    double B = 0.0;   // relaxation time / diffusion time
    double L = 1.0;   // adsorption length / thickness
    double N0 = 1.0;  // initial dimensionless inventory n0*d

    /// Throws InvalidInput unless A > 0, B >= 0, L >= 0 and N0 > 0.
    void validate() const;
};

struct Equilibrium {
    double density;  // N_eq
    double sigma;    // sigma_eq
};

Params from_physical(const PhysicalInputs& p);

/// Final state reached for t* -> infinity: N_eq = N0/(1+2L), sigma_eq = L N_eq.
Equilibrium equilibrium(const Params& p) noexcept;

/// Propagation speed 1/sqrt(B) of density fronts. Infinite for B = 0.
double wave_speed(const Params& p) noexcept;

/// Eigenvalue 1/(2 sqrt(B)) separating real from complex-conjugate exponents.
/// Infinite for B = 0.
double alpha_critical(const Params& p) noexcept;

/// Initial bulk density N(z*, 0). The initial time derivative is always zero
/// for the regular solution; a nonzero rate is an fdm option.
class InitialCondition {
public:
    enum class Kind { step, parabolic, sampled };

    /// N0 in the open slab, 0 exactly at the walls.
    static InitialCondition step();
    /// (3 N0 / 2)(1 - 4 z*^2): symmetric, zero at the walls, mass N0.
    static InitialCondition parabolic();
    /// Piecewise-linear data on an increasing grid covering either [0, 1/2]
    /// or [-1/2, 1/2]. Constraint checks against N0 happen in validate().
    static InitialCondition sampled(std::vector<double> z, std::vector<double> values);

    Kind kind() const noexcept { return kind_; }

    /// Checks the wall value, mass and evenness against p.N0 (relative 1e-6
    /// for sampled data). Closed forms always pass.
    void validate(const Params& p) const;

    double value(double z, const Params& p) const;

    /// Integral of N(z*,0) over [-1/2, 1/2].
    double mass(const Params& p) const;
    /// Integral of N(z*,0)^2 over [-1/2, 1/2].
    double square_integral(const Params& p) const;
    /// Integral of N(z*,0) cos(alpha z*) over [-1/2, 1/2], exact for every kind.
    double cosine_moment(double alpha, const Params& p) const;

    /// Half-domain nodes (z >= 0) of sampled data.
    std::span<const double> sample_z() const noexcept { return z_; }
    std::span<const double> sample_values() const noexcept { return v_; }

private:
    explicit InitialCondition(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<double> z_;
    std::vector<double> v_;
};

/// Evaluates the initial density on a grid contained in [-1/2, 1/2].
std::vector<double> sample_initial(const InitialCondition& ic, const Params& p,
                                   std::span<const double> zgrid);

}  // namespace hyperads
