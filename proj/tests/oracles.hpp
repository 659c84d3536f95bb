#pragma once

// Reference computations that share no code with the library.

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                           double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;
    if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson with Richardson correction.
inline double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-13,
                        int depth = 40) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

/// Splits [a, b] into n panels so oscillatory integrands stay resolved.
inline double integrate_panels(const std::function<double(double)>& f, double a, double b, int n,
                               double tol = 1e-14) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double lo = a + (b - a) * i / n, hi = a + (b - a) * (i + 1) / n;
        s += integrate(f, lo, hi, tol / n);
    }
    return s;
}

/// Largest |G| of the three-level damped-wave scheme
///   B (u+ - 2u + u-)/k^2 + (u+ - u-)/(2k) = (u_{i+1} - 2u_i + u_{i-1})/h^2
/// for Fourier phase theta, from its characteristic quadratic in G.
inline double amplification(double B, double k, double lambda, double theta) {
    const double s2 = std::pow(std::sin(0.5 * theta), 2);
    const double a = 2.0 * B + k;
    const double b = -(4.0 * B - 8.0 * lambda * lambda * s2);
    const double c = 2.0 * B - k;
    const std::complex<double> disc = std::sqrt(std::complex<double>(b * b - 4.0 * a * c));
    const auto g1 = (-b + disc) / (2.0 * a), g2 = (-b - disc) / (2.0 * a);
    return std::max(std::abs(g1), std::abs(g2));
}

/// Roots of B mu^2 + mu + a^2 = 0 by the textbook formula in complex arithmetic.
inline std::pair<std::complex<double>, std::complex<double>> quadratic_roots(double B, double a) {
    const std::complex<double> d = std::sqrt(std::complex<double>(1.0 - 4.0 * a * a * B));
    return {(-1.0 - d) / (2.0 * B), (-1.0 + d) / (2.0 * B)};
}

}  // namespace oracle
