#include "hyperads/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperads/error.hpp"

namespace hyperads {

namespace {

constexpr double kHalf = 0.5;
constexpr double kSampledTolerance = 1e-6;
constexpr double kDomainSlack = 1e-12;

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw InvalidInput(std::string(name) + " must be finite and > 0, got " + std::to_string(v));
    }
}

// Integral of (a + b z) cos(alpha z) over [z0, z1].
double linear_cos_integral(double z0, double z1, double f0, double f1, double alpha) {
    const double dz = z1 - z0;
    if (dz <= 0.0) return 0.0;
    if (alpha == 0.0) return 0.5 * dz * (f0 + f1);
    const double b = (f1 - f0) / dz;
    const double a = f0 - b * z0;
    auto primitive = [&](double z) {
        const double s = std::sin(alpha * z);
        const double c = std::cos(alpha * z);
        return a * s / alpha + b * (z * s / alpha + c / (alpha * alpha));
    };
    return primitive(z1) - primitive(z0);
}

// Integral of (1 - 4 z^2) cos(alpha z) over [-1/2, 1/2].
double parabola_cos_integral(double alpha) {
    const double x = std::abs(alpha);
    if (x < 0.5) {
        // sum_n (-1)^n (x/2)^{2n}/(2n)! * 2/((2n+1)(2n+3))
        double term = 1.0;
        double sum = 0.0;
        const double q = 0.25 * x * x;
        for (int n = 0; n < 12; ++n) {
            if (n > 0) term *= -q / ((2.0 * n - 1.0) * (2.0 * n));
            sum += term * 2.0 / ((2.0 * n + 1.0) * (2.0 * n + 3.0));
        }
        return sum;
    }
    const double s = std::sin(0.5 * x);
    const double c = std::cos(0.5 * x);
    return 16.0 * s / (x * x * x) - 8.0 * c / (x * x);
}

}  // namespace

void Params::validate() const {
    require_positive(A, "A");
    require_positive(N0, "N0");
    if (!(B >= 0.0) || !std::isfinite(B)) throw InvalidInput("B must be finite and >= 0");
    if (!(L >= 0.0) || !std::isfinite(L)) throw InvalidInput("L must be finite and >= 0");
}

Params from_physical(const PhysicalInputs& p) {
    require_positive(p.d, "d");
    require_positive(p.D, "D");
    require_positive(p.tau_a, "tau_a");
    require_positive(p.k_a, "k_a");
    require_positive(p.n0, "n0");
    if (!(p.tau_r >= 0.0) || !std::isfinite(p.tau_r)) {
        throw InvalidInput("tau_r must be finite and >= 0");
    }
    const double d2 = p.d * p.d;
    Params out;
    out.A = (p.tau_a * p.D) / d2;
    out.B = (p.tau_r * p.D) / d2;
    out.L = (p.k_a * p.tau_a) / p.d;
    out.N0 = p.n0 * p.d;
    return out;
}

Equilibrium equilibrium(const Params& p) noexcept {
    const double denom = 1.0 + 2.0 * p.L;
    const double n_eq = p.N0 / denom;
    // sigma from the mass balance keeps N_eq + 2 sigma_eq = N0 to rounding
    return {n_eq, 0.5 * (p.N0 - n_eq)};
}

double wave_speed(const Params& p) noexcept {
    if (p.B == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / std::sqrt(p.B);
}

double alpha_critical(const Params& p) noexcept {
    if (p.B == 0.0) return std::numeric_limits<double>::infinity();
    return 0.5 / std::sqrt(p.B);
}

InitialCondition InitialCondition::step() { return InitialCondition(Kind::step); }

InitialCondition InitialCondition::parabolic() { return InitialCondition(Kind::parabolic); }

InitialCondition InitialCondition::sampled(std::vector<double> z, std::vector<double> values) {
    if (z.size() != values.size()) throw InvalidInput("sampled initial condition: size mismatch");
    if (z.size() < 2) throw InvalidInput("sampled initial condition: need at least two nodes");
    for (std::size_t i = 1; i < z.size(); ++i) {
        if (!(z[i] > z[i - 1])) throw InvalidInput("sampled initial condition: z must increase");
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw InvalidInput("sampled initial condition: non-finite value");
    }
    const bool full = z.front() < -kDomainSlack;
    const double lo = full ? -kHalf : 0.0;
    if (std::abs(z.front() - lo) > 1e-9 || std::abs(z.back() - kHalf) > 1e-9) {
        throw InvalidInput("sampled initial condition: grid must cover [0, 1/2] or [-1/2, 1/2]");
    }

    InitialCondition ic(Kind::sampled);
    if (!full) {
        ic.z_ = std::move(z);
        ic.v_ = std::move(values);
        ic.z_.front() = 0.0;
        ic.z_.back() = kHalf;
        return ic;
    }

    // Keep the full data for the symmetry check; store z >= 0 for evaluation.
    auto interp = [&](double x) {
        auto it = std::upper_bound(z.begin(), z.end(), x);
        if (it == z.begin()) return values.front();
        if (it == z.end()) return values.back();
        const auto i = static_cast<std::size_t>(it - z.begin());
        const double t = (x - z[i - 1]) / (z[i] - z[i - 1]);
        return values[i - 1] + t * (values[i] - values[i - 1]);
    };
    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    for (double x : z) {
        if (std::abs(interp(x) - interp(-x)) > kSampledTolerance * std::max(scale, 1e-300)) {
            throw InvalidInput("sampled initial condition is not even in z*");
        }
    }
    ic.z_.push_back(0.0);
    ic.v_.push_back(interp(0.0));
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] > kDomainSlack) {
            ic.z_.push_back(z[i]);
            ic.v_.push_back(values[i]);
        }
    }
    ic.z_.back() = kHalf;
    return ic;
}

void InitialCondition::validate(const Params& p) const {
    p.validate();
    if (kind_ != Kind::sampled) return;
    const double tol = kSampledTolerance * p.N0;
    if (std::abs(v_.back()) > tol) {
        throw InvalidInput("sampled initial condition must vanish at the walls");
    }
    const double m = mass(p);
    if (std::abs(m - p.N0) > tol) {
        throw InvalidInput("sampled initial condition mass " + std::to_string(m) +
                           " differs from N0 = " + std::to_string(p.N0));
    }
}

double InitialCondition::value(double z, const Params& p) const {
    const double x = std::abs(z);
    if (x > kHalf + kDomainSlack) throw InvalidInput("z* outside [-1/2, 1/2]");
    switch (kind_) {
        case Kind::step:
            return x >= kHalf - kDomainSlack ? 0.0 : p.N0;
        case Kind::parabolic:
            if (x >= kHalf - kDomainSlack) return 0.0;
            return 1.5 * p.N0 * (1.0 - 4.0 * x * x);
        case Kind::sampled: {
            auto it = std::upper_bound(z_.begin(), z_.end(), x);
            if (it == z_.end()) return v_.back();
            const auto i = static_cast<std::size_t>(it - z_.begin());
            const double t = (x - z_[i - 1]) / (z_[i] - z_[i - 1]);
            return v_[i - 1] + t * (v_[i] - v_[i - 1]);
        }
    }
    return 0.0;
}

double InitialCondition::mass(const Params& p) const {
    if (kind_ != Kind::sampled) return p.N0;
    double half = 0.0;
    for (std::size_t i = 1; i < z_.size(); ++i) {
        half += 0.5 * (z_[i] - z_[i - 1]) * (v_[i] + v_[i - 1]);
    }
    return 2.0 * half;
}

double InitialCondition::square_integral(const Params& p) const {
    switch (kind_) {
        case Kind::step:
            return p.N0 * p.N0;
        case Kind::parabolic:
            return 1.2 * p.N0 * p.N0;
        case Kind::sampled: {
            double half = 0.0;
            for (std::size_t i = 1; i < z_.size(); ++i) {
                const double a = v_[i - 1];
                const double b = v_[i];
                half += (z_[i] - z_[i - 1]) * (a * a + a * b + b * b) / 3.0;
            }
            return 2.0 * half;
        }
    }
    return 0.0;
}

double InitialCondition::cosine_moment(double alpha, const Params& p) const {
    switch (kind_) {
        case Kind::step:
            if (alpha == 0.0) return p.N0;
            return p.N0 * 2.0 * std::sin(0.5 * alpha) / alpha;
        case Kind::parabolic:
            return 1.5 * p.N0 * parabola_cos_integral(alpha);
        case Kind::sampled: {
            double half = 0.0;
            for (std::size_t i = 1; i < z_.size(); ++i) {
                half += linear_cos_integral(z_[i - 1], z_[i], v_[i - 1], v_[i], alpha);
            }
            return 2.0 * half;
        }
    }
    return 0.0;
}

std::vector<double> sample_initial(const InitialCondition& ic, const Params& p,
                                   std::span<const double> zgrid) {
    ic.validate(p);
    std::vector<double> out;
    out.reserve(zgrid.size());
    for (double z : zgrid) out.push_back(ic.value(z, p));
    return out;
}

}  // namespace hyperads
