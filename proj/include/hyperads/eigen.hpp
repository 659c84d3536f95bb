#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hyperads/params.hpp"

namespace hyperads {

/// Roots of B mu^2 + mu + alpha^2 = 0. mu1 carries the '+' sign, so for the
/// real branch mu1 <= mu2 < 0; above alpha_c the pair is complex conjugate.
struct Exponents {
    std::complex<double> mu1;
    std::complex<double> mu2;

    bool oscillatory() const noexcept { return mu1.imag() != 0.0; }
};

enum class Branch { f1, f2, re_e };

struct Mode {
    double alpha = 0.0;
    Exponents exponents;
    Branch branch = Branch::re_e;
    /// m such that the root lies between the tan poles around 2 m pi.
    int index = 0;
};

/// For B = 0, mu1 is -infinity and mu2 = -alpha^2 (parabolic limit).
Exponents exponents(double alpha, double B);

/// tan(alpha/2)/alpha + L/(1 + mu1 A). Real-exponent branch only (alpha <= alpha_c).
double f1(double alpha, const Params& p);
/// Same with mu2.
double f2(double alpha, const Params& p);

struct ComplexEigenValue {
    double re;
    double im;  // sign of the alpha' branch; alpha'' carries the opposite sign
};

/// Real and imaginary parts of the eigenvalue equation for alpha > alpha_c.
/// Both come from the L/(1 + mu A) term, so Im[E] scales with L.
ComplexEigenValue eigen_equation_complex(double alpha, const Params& p);

/// Real part of the eigenvalue equation, usable for every alpha > 0. Below
/// alpha_c it equals (f1 + f2)/2.
double eigen_equation_real(double alpha, const Params& p);

struct RootSearchOptions {
    double pole_guard = 1e-8;          // excluded half-width around tan poles
    double bracket_offset = 1e-6;      // bracket ends sit pi*offset from tan poles
    int samples_per_interval = 128;    // clustered sign-change scan
    double width_tolerance = 1e-12;
    double residual_tolerance = 1e-12;
    double critical_nudge = 1e-9;      // roots this close to alpha_c are moved off it
    double alpha_limit = 1e8;          // beyond this, tan(alpha/2) is not resolvable
};

/// First `count` positive roots of Re[E] = 0 in increasing order. Each pole-free
/// interval between consecutive odd multiples of pi (and the kinetic pole
/// alpha^2 = (A - B)/A^2 when A > B) is scanned for sign changes and bisected.
std::vector<Mode> find_eigenvalues(const Params& p, int count,
                                   const RootSearchOptions& opts = {});

struct EigenDumpRow {
    double alpha;
    double f1;
    double f2;
    double re_e;
    double im_e;
};

/// Tabulates f1, f2, Re[E], Im[E] on the given grid. Above alpha_c, f1/f2 report
/// the real part of the complexified equations; Im[E] is 0 below alpha_c.
/// Points within the pole guard come out as NaN.
std::vector<EigenDumpRow> eigen_dump(const Params& p, std::span<const double> alphas);

}  // namespace hyperads
