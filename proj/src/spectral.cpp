#include "hyperads/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperads/error.hpp"

namespace hyperads {

namespace {

constexpr double kMaxCondition = 1e12;

// sin(x/2)/x, continuous at 0
double half_sinc(double x) noexcept {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 0.5 - x2 / 48.0 + x2 * x2 / 3840.0;
    }
    return std::sin(0.5 * x) / x;
}

double max_off_diagonal(const Eigen::MatrixXd& coeff, const Eigen::MatrixXd& G) {
    const Eigen::MatrixXd P = coeff.transpose() * G * coeff;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < P.rows(); ++i) {
        for (Eigen::Index j = 0; j < P.cols(); ++j) {
            if (i == j) continue;
            worst = std::max(worst, std::abs(P(i, j)) / std::sqrt(P(i, i) * P(j, j)));
        }
    }
    return worst;
}

double condition_number(const Eigen::MatrixXd& G) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double lo = ev.minCoeff();
    if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
    return ev.maxCoeff() / lo;
}

void check_condition(double cond, std::size_t n) {
    if (!(cond <= kMaxCondition)) {
        std::ostringstream os;
        os << "Gram matrix of " << n << " modes is numerically singular (condition " << cond
           << "); use fewer modes";
        throw DegenerateBasis(os.str());
    }
}

std::vector<double> alphas_of(std::span<const Mode> modes) {
    std::vector<double> a;
    a.reserve(modes.size());
    for (const auto& m : modes) a.push_back(m.alpha);
    return a;
}

}  // namespace

double gram_entry(double alpha_a, double alpha_b) noexcept {
    return half_sinc(alpha_a - alpha_b) + half_sinc(alpha_a + alpha_b);
}

Eigen::MatrixXd gram_matrix(std::span<const double> alphas) {
    const auto n = static_cast<Eigen::Index>(alphas.size());
    Eigen::MatrixXd G(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            G(i, j) = G(j, i) = gram_entry(alphas[static_cast<std::size_t>(i)],
                                           alphas[static_cast<std::size_t>(j)]);
        }
    }
    return G;
}

OrthoBasis orthogonalize(std::span<const double> alphas) {
    if (alphas.empty()) throw InvalidInput("orthogonalize: no modes");
    const Eigen::MatrixXd G = gram_matrix(alphas);
    const auto n = G.rows();

    OrthoBasis basis;
    basis.gram_condition = condition_number(G);
    check_condition(basis.gram_condition, alphas.size());

    basis.coeff = Eigen::MatrixXd::Zero(n, n);
    basis.norm2 = Eigen::VectorXd::Zero(n);
    Eigen::MatrixXd Gpsi(n, n);  // column p holds G * coeff.col(p)
    for (Eigen::Index q = 0; q < n; ++q) {
        Eigen::VectorXd v = Eigen::VectorXd::Unit(n, q);
        for (Eigen::Index p = 0; p < q; ++p) {
            const double proj = Gpsi.col(p).dot(v) / basis.norm2(p);
            v -= proj * basis.coeff.col(p);
        }
        // the projections leave the leading coefficient untouched
        basis.coeff.col(q) = v;
        Gpsi.col(q) = G * v;
        basis.norm2(q) = v.dot(Gpsi.col(q));
        if (!(basis.norm2(q) > 0.0)) {
            throw DegenerateBasis("orthogonalization produced a null vector; use fewer modes");
        }
    }
    basis.orthogonality_residual = max_off_diagonal(basis.coeff, G);
    return basis;
}

OrthoBasis orthogonalize_by_minors(std::span<const double> alphas) {
    if (alphas.empty()) throw InvalidInput("orthogonalize_by_minors: no modes");
    const Eigen::MatrixXd G = gram_matrix(alphas);
    const auto n = G.rows();

    OrthoBasis basis;
    basis.gram_condition = condition_number(G);
    check_condition(basis.gram_condition, alphas.size());
    basis.coeff = Eigen::MatrixXd::Zero(n, n);
    basis.norm2 = Eigen::VectorXd::Zero(n);

    for (Eigen::Index q = 0; q < n; ++q) {
        const Eigen::MatrixXd Dq = G.topLeftCorner(q + 1, q + 1);
        const double m_qq = q == 0 ? 1.0 : G.topLeftCorner(q, q).determinant();
        for (Eigen::Index a = 0; a <= q; ++a) {
            double minor = 1.0;
            if (q > 0) {
                // delete row q and column a
                Eigen::MatrixXd sub(q, q);
                for (Eigen::Index r = 0; r < q; ++r) {
                    for (Eigen::Index c = 0, cc = 0; c <= q; ++c) {
                        if (c == a) continue;
                        sub(r, cc++) = Dq(r, c);
                    }
                }
                minor = sub.determinant();
            }
            const double sign = ((a + q) % 2 == 0) ? 1.0 : -1.0;
            basis.coeff(a, q) = sign * minor / m_qq;
        }
        basis.norm2(q) = basis.coeff.col(q).dot(G * basis.coeff.col(q));
    }
    basis.orthogonality_residual = max_off_diagonal(basis.coeff, G);
    return basis;
}

Projection project_initial(const InitialCondition& ic, const OrthoBasis& basis,
                           std::span<const double> alphas, const Params& p) {
    const auto n = static_cast<Eigen::Index>(alphas.size());
    if (basis.coeff.rows() != n) throw InvalidInput("project_initial: basis/mode count mismatch");
    const double n_eq = equilibrium(p).density;

    // moments of f = N(z,0) - N_eq against phi_a
    Eigen::VectorXd b(n);
    for (Eigen::Index a = 0; a < n; ++a) {
        const double alpha = alphas[static_cast<std::size_t>(a)];
        b(a) = ic.cosine_moment(alpha, p) - n_eq * 2.0 * std::sin(0.5 * alpha) / alpha;
    }

    Projection out;
    out.R.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        out.R(j) = basis.coeff.col(j).dot(b) / basis.norm2(j);
    }
    out.C = basis.coeff * out.R;

    const double f_norm2 = ic.square_integral(p) - 2.0 * n_eq * ic.mass(p) + n_eq * n_eq;
    double captured = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) captured += out.R(j) * out.R(j) * basis.norm2(j);
    out.residual_norm = std::sqrt(std::max(0.0, f_norm2 - captured));
    return out;
}

std::vector<Amplitude> amplitudes(std::span<const double> C, std::span<const Mode> modes) {
    if (C.size() != modes.size()) throw InvalidInput("amplitudes: size mismatch");
    std::vector<Amplitude> out;
    out.reserve(C.size());
    for (std::size_t i = 0; i < C.size(); ++i) {
        const auto& e = modes[i].exponents;
        if (e.mu2 == 0.0) throw DegenerateMode("mu2 = 0");
        if (e.mu1 == e.mu2) {
            std::ostringstream os;
            os << "alpha = " << modes[i].alpha << " sits at the critical point (mu1 = mu2)";
            throw DegenerateMode(os.str());
        }
        const std::complex<double> ratio = e.mu1 / e.mu2;
        const std::complex<double> s1 = C[i] / (1.0 - ratio);
        out.push_back({s1, -ratio * s1});
    }
    return out;
}

SpectralSolution::SpectralSolution(Params p, std::vector<Mode> modes, std::vector<double> C,
                                   std::vector<Amplitude> amps, SpectralDiagnostics diag)
    : params_(p),
      eq_(equilibrium(p)),
      modes_(std::move(modes)),
      C_(std::move(C)),
      amps_(std::move(amps)),
      diag_(diag) {
    if (modes_.size() != amps_.size() || modes_.size() != C_.size()) {
        throw InvalidInput("SpectralSolution: inconsistent mode data");
    }
    const auto s0 = sigma_complex(0.0);
    diag_.initial_sigma = s0.real();
    double imag = std::abs(s0.imag());
    for (double t : {0.0, 0.05, 0.5, 2.0}) {
        imag = std::max(imag, std::abs(sigma_complex(t).imag()));
        for (double z : {0.0, 0.25, 0.5}) imag = std::max(imag, std::abs(density_complex(z, t).imag()));
    }
    diag_.max_imag_residue = imag;
}

std::complex<double> SpectralSolution::density_complex(double z, double t) const {
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        const auto& m = modes_[i];
        const auto term = amps_[i].S1 * std::exp(m.exponents.mu1 * t) + amps_[i].S2 * std::exp(m.exponents.mu2 * t);
        sum += term * std::cos(m.alpha * z);
    }
    return eq_.density + sum;
}

double SpectralSolution::density_rate(double z, double t) const {
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        const auto& m = modes_[i];
        const auto& e = m.exponents;
        sum += (e.mu1 * amps_[i].S1 * std::exp(e.mu1 * t) + e.mu2 * amps_[i].S2 * std::exp(e.mu2 * t)) *
               std::cos(m.alpha * z);
    }
    return sum.real();
}

std::complex<double> SpectralSolution::sigma_complex(double t) const {
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        const auto& m = modes_[i];
        const auto term = amps_[i].S1 * std::exp(m.exponents.mu1 * t) + amps_[i].S2 * std::exp(m.exponents.mu2 * t);
        sum += term * (std::sin(0.5 * m.alpha) / m.alpha);
    }
    return eq_.sigma - sum;
}

double SpectralSolution::sigma_rate(double t) const {
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        const auto& m = modes_[i];
        const auto& e = m.exponents;
        sum += (e.mu1 * amps_[i].S1 * std::exp(e.mu1 * t) + e.mu2 * amps_[i].S2 * std::exp(e.mu2 * t)) *
               (std::sin(0.5 * m.alpha) / m.alpha);
    }
    return -sum.real();
}

double SpectralSolution::mass_residual(double t) const {
    std::complex<double> bulk = eq_.density;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        const auto& m = modes_[i];
        const auto term = amps_[i].S1 * std::exp(m.exponents.mu1 * t) + amps_[i].S2 * std::exp(m.exponents.mu2 * t);
        bulk += term * (2.0 * std::sin(0.5 * m.alpha) / m.alpha);
    }
    return bulk.real() + 2.0 * sigma(t) - params_.N0;
}

double SpectralSolution::kinetic_residual(double t) const {
    return params_.A * sigma_rate(t) - params_.L * density(0.5, t) + sigma(t);
}

SpectralSolution solve_spectral(const Params& p, const InitialCondition& ic, int mode_count) {
    p.validate();
    ic.validate(p);
    if (!(p.B > 0.0)) throw InvalidInput("the spectral engine needs B > 0; use the parabolic oracle for B = 0");

    auto modes = find_eigenvalues(p, mode_count);
    const auto alphas = alphas_of(modes);
    const OrthoBasis basis = orthogonalize(alphas);
    const Projection proj = project_initial(ic, basis, alphas, p);

    std::vector<double> C(proj.C.data(), proj.C.data() + proj.C.size());
    auto amps = amplitudes(C, modes);

    SpectralDiagnostics diag;
    diag.gram_condition = basis.gram_condition;
    diag.orthogonality_residual = basis.orthogonality_residual;
    diag.reconstruction_error = proj.residual_norm;
    return SpectralSolution(p, std::move(modes), std::move(C), std::move(amps), diag);
}

TimeSeries sample_series(const SpectralSolution& sol, std::span<const double> times,
                         std::span<const double> probes, int profile_nodes, std::size_t profile_stride) {
    TimeSeries ts;
    ts.inventory = sol.params().N0;
    ts.probe_z.assign(probes.begin(), probes.end());
    ts.probe_values.assign(probes.size(), {});
    if (profile_nodes > 1) {
        for (int i = 0; i < profile_nodes; ++i) ts.profile_z.push_back(0.5 * i / (profile_nodes - 1));
    }
    const std::size_t stride = std::max<std::size_t>(1, profile_stride);
    for (std::size_t j = 0; j < times.size(); ++j) {
        const double t = times[j];
        ts.times.push_back(t);
        ts.sigma.push_back(sol.sigma(t));
        ts.surface.push_back(sol.density(0.5, t));
        ts.conservation_residual.push_back(std::abs(sol.mass_residual(t)));
        for (std::size_t k = 0; k < probes.size(); ++k) ts.probe_values[k].push_back(sol.density(probes[k], t));
        if (!ts.profile_z.empty() && (j % stride == 0 || j + 1 == times.size())) {
            std::vector<double> row;
            row.reserve(ts.profile_z.size());
            for (double z : ts.profile_z) row.push_back(sol.density(z, t));
            ts.profile_times.push_back(t);
            ts.profiles.push_back(std::move(row));
        }
    }
    return ts;
}

}  // namespace hyperads
