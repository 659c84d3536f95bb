#include "hyperads/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hyperads/error.hpp"

namespace hyperads {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void guard_tan_pole(double alpha, double guard) {
    // nearest odd multiple of pi
    const double m = std::round((alpha / kPi - 1.0) / 2.0);
    const double pole = (2.0 * m + 1.0) * kPi;
    if (std::abs(alpha - pole) < guard) {
        std::ostringstream os;
        os << "alpha = " << alpha << " is within " << guard << " of the tan pole " << pole;
        throw PoleError(os.str(), alpha, pole);
    }
}

double tan_term(double alpha) { return std::tan(0.5 * alpha) / alpha; }

double kinetic_pole(const Params& p) {
    if (!(p.A > p.B)) return kNaN;
    return std::sqrt((p.A - p.B) / (p.A * p.A));
}

double real_branch(double alpha, const Params& p, bool first) {
    if (!(alpha > 0.0)) throw InvalidInput("alpha must be > 0");
    if (p.B > 0.0 && alpha > alpha_critical(p)) {
        throw InvalidInput("f1/f2 are real only below alpha_c; use eigen_equation_complex");
    }
    guard_tan_pole(alpha, 1e-8);
    const Exponents e = exponents(alpha, p.B);
    const double mu = first ? e.mu1.real() : e.mu2.real();
    if (std::isinf(mu)) return tan_term(alpha);  // L/(1 + mu A) -> 0
    const double denom = 1.0 + mu * p.A;
    if (std::abs(denom) < 1e-12) {
        throw PoleError("1 + mu A vanishes", alpha, kinetic_pole(p));
    }
    return tan_term(alpha) + p.L / denom;
}

// Chebyshev-clustered abscissae on [0, 1] so that roots hugging either end of
// a tan branch are still separated from the singularity by a sample.
std::vector<double> clustered_unit_grid(int n) {
    std::vector<double> u(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        u[static_cast<std::size_t>(i)] = 0.5 * (1.0 - std::cos(kPi * i / n));
    }
    return u;
}

}  // namespace

Exponents exponents(double alpha, double B) {
    if (!(alpha > 0.0)) throw InvalidInput("alpha must be > 0");
    if (!(B >= 0.0)) throw InvalidInput("B must be >= 0");
    const double a2 = alpha * alpha;
    if (B == 0.0) {
        return {std::complex<double>(-std::numeric_limits<double>::infinity(), 0.0),
                std::complex<double>(-a2, 0.0)};
    }
    const double disc = 1.0 - 4.0 * a2 * B;
    const double inv2b = 0.5 / B;
    if (std::abs(disc) <= 8.0 * std::numeric_limits<double>::epsilon()) {
        const std::complex<double> mu(-inv2b, 0.0);
        return {mu, mu};
    }
    if (disc > 0.0) {
        const double mu1 = -(1.0 + std::sqrt(disc)) * inv2b;
        // Vieta avoids cancellation in -(1 - sqrt(disc))/(2B) for small alpha^2 B
        const double mu2 = a2 / (B * mu1);
        return {std::complex<double>(mu1, 0.0), std::complex<double>(mu2, 0.0)};
    }
    const double w = std::sqrt(-disc);
    return {std::complex<double>(-inv2b, -w * inv2b), std::complex<double>(-inv2b, w * inv2b)};
}

double f1(double alpha, const Params& p) { return real_branch(alpha, p, true); }

double f2(double alpha, const Params& p) { return real_branch(alpha, p, false); }

ComplexEigenValue eigen_equation_complex(double alpha, const Params& p) {
    if (!(p.B > 0.0)) throw InvalidInput("eigen_equation_complex needs B > 0");
    if (!(alpha > alpha_critical(p))) throw InvalidInput("eigen_equation_complex needs alpha > alpha_c");
    guard_tan_pole(alpha, 1e-8);
    const double w2 = 4.0 * alpha * alpha * p.B - 1.0;
    const double g = 2.0 * p.B - p.A;
    const double denom = g * g + p.A * p.A * w2;
    return {tan_term(alpha) + p.L * 2.0 * p.B * g / denom,
            p.L * 2.0 * p.B * p.A * std::sqrt(w2) / denom};
}

double eigen_equation_real(double alpha, const Params& p) {
    if (!(alpha > 0.0)) throw InvalidInput("alpha must be > 0");
    guard_tan_pole(alpha, 1e-8);
    if (p.B == 0.0) {
        // parabolic limit: L/(1 - alpha^2 A)
        const double denom = 1.0 - alpha * alpha * p.A;
        if (std::abs(denom) < 1e-14) throw PoleError("1 - alpha^2 A vanishes", alpha, 1.0 / std::sqrt(p.A));
        return tan_term(alpha) + p.L / denom;
    }
    // 2B(2B-A)/((2B-A)^2 + A^2(4 alpha^2 B - 1)) simplified by 4B
    const double g = 2.0 * p.B - p.A;
    const double denom = p.B - p.A + p.A * p.A * alpha * alpha;
    if (std::abs(denom) <= 1e-14 * (std::abs(p.B - p.A) + p.A * p.A * alpha * alpha)) {
        throw PoleError("Re[E] has a pole where 1 + mu A vanishes", alpha, kinetic_pole(p));
    }
    return tan_term(alpha) + p.L * 0.5 * g / denom;
}

std::vector<Mode> find_eigenvalues(const Params& p, int count, const RootSearchOptions& opts) {
    p.validate();
    if (count < 1) throw InvalidInput("eigenvalue count must be >= 1");
    if (!(p.B > 0.0)) throw InvalidInput("find_eigenvalues needs B > 0");

    const double a_crit = alpha_critical(p);
    const double k_pole = kinetic_pole(p);
    const auto unit = clustered_unit_grid(opts.samples_per_interval);
    const double offset = kPi * opts.bracket_offset;

    std::vector<Mode> modes;
    std::vector<double> found;
    auto f = [&](double a) { return eigen_equation_real(a, p); };

    auto record = [&](double root, int index) {
        if (std::abs(root - a_crit) < opts.critical_nudge) {
            root = root < a_crit ? a_crit - opts.critical_nudge : a_crit + opts.critical_nudge;
        }
        Mode m;
        m.alpha = root;
        m.exponents = exponents(root, p.B);
        m.branch = Branch::re_e;
        m.index = index;
        modes.push_back(m);
        found.push_back(root);
    };

    auto bisect = [&](double left, double right, double f_left, double lo, double hi) {
        while (right - left > opts.width_tolerance) {
            const double mid = 0.5 * (left + right);
            if (mid <= left || mid >= right) break;
            const double fm = f(mid);
            if (std::abs(fm) < opts.residual_tolerance) return mid;
            if ((fm < 0.0) == (f_left < 0.0)) {
                left = mid;
                f_left = fm;
            } else {
                right = mid;
            }
        }
        const double root = 0.5 * (left + right);
        // A sign change through a singularity would leave a large residual.
        const double resid = std::abs(f(root));
        const double scale = 1.0 + std::abs(tan_term(root)) + p.L;
        if (!(resid < 1e-6 * scale)) {
            std::ostringstream os;
            os << "sign change near alpha = " << root << " in bracket [" << lo << ", " << hi
               << "] did not converge to a root (|Re[E]| = " << resid << ")";
            throw BracketError(os.str());
        }
        return root;
    };

    auto scan = [&](double lo, double hi, int index) {
        if (!(hi > lo)) return;
        double prev_a = lo;
        double prev_f = f(lo);
        if (prev_f == 0.0) record(lo, index);
        for (std::size_t i = 1; i < unit.size(); ++i) {
            const double a = lo + (hi - lo) * unit[i];
            const double fa = f(a);
            if (fa == 0.0) {
                record(a, index);
            } else if (prev_f != 0.0 && (prev_f < 0.0) != (fa < 0.0)) {
                record(bisect(prev_a, a, prev_f, lo, hi), index);
            }
            prev_a = a;
            prev_f = fa;
        }
    };

    for (int m = 0; static_cast<int>(modes.size()) < count; ++m) {
        double lo = m == 0 ? 1e-9 : (2.0 * m - 1.0) * kPi + offset;
        const double hi = (2.0 * m + 1.0) * kPi - offset;
        if (hi > opts.alpha_limit) {
            std::ostringstream os;
            os << "only " << modes.size() << " of " << count << " eigenvalues resolvable below alpha = "
               << opts.alpha_limit;
            throw PartialResult(os.str(), found);
        }
        if (std::isfinite(k_pole) && k_pole > lo && k_pole < hi) {
            const double d = 1e-9 * std::max(1.0, k_pole);
            scan(lo, k_pole - d, m);
            lo = k_pole + d;
        }
        scan(lo, hi, m);
    }
    modes.resize(static_cast<std::size_t>(count));
    return modes;
}

std::vector<EigenDumpRow> eigen_dump(const Params& p, std::span<const double> alphas) {
    const double a_crit = alpha_critical(p);
    std::vector<EigenDumpRow> rows;
    rows.reserve(alphas.size());
    for (double a : alphas) {
        EigenDumpRow r{a, kNaN, kNaN, kNaN, kNaN};
        try {
            if (a <= a_crit) {
                r.f1 = f1(a, p);
                r.f2 = f2(a, p);
                r.re_e = eigen_equation_real(a, p);
                r.im_e = 0.0;
            } else {
                const auto e = eigen_equation_complex(a, p);
                r.f1 = r.f2 = r.re_e = e.re;
                r.im_e = e.im;
            }
        } catch (const PoleError&) {
            // left as NaN
        }
        rows.push_back(r);
    }
    return rows;
}

}  // namespace hyperads
