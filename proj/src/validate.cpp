#include "hyperads/validate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperads/error.hpp"
#include "hyperads/fdm.hpp"

namespace hyperads {

TimeSeries run_parabolic(const Params& p_in, const InitialCondition& ic, int n_z, double T,
                         const ParabolicOptions& opts) {
    Params p = p_in;
    p.B = 0.0;
    p.validate();
    ic.validate(p);
    if (n_z < 8) throw ConfigError("parabolic grid needs n_z >= 8");
    if (!(T > 0.0)) throw ConfigError("horizon must be > 0");
    if (!(opts.k_over_h2 > 0.0) || opts.k_over_h2 > 0.5) {
        throw ConfigError("parabolic explicit scheme needs 0 < k/h^2 <= 1/2");
    }
    const Grid shape = Grid::from_steps(n_z, 1, T);
    const double h = shape.h;
    const auto n_t = static_cast<long>(std::ceil(T / (opts.k_over_h2 * h * h)));
    const Grid grid = Grid::from_steps(n_z, n_t, T);
    const double k = grid.k;
    const double r = k / (h * h);

    const auto z = grid.nodes();
    std::vector<double> row = sample_initial(ic, p, z);
    std::vector<double> next(row.size());
    const std::size_t w = row.size() - 1;  // wall node

    TimeSeries ts;
    ts.inventory = 2.0 * trapezoid(row, h);
    ts.probe_z = opts.probes;
    ts.probe_values.assign(opts.probes.size(), {});
    auto record = [&](double t, double sigma) {
        ts.times.push_back(t);
        ts.sigma.push_back(sigma);
        ts.surface.push_back(row[w]);
        ts.conservation_residual.push_back(std::abs(2.0 * trapezoid(row, h) + 2.0 * sigma - ts.inventory));
        for (std::size_t q = 0; q < opts.probes.size(); ++q) {
            ts.probe_values[q].push_back(interpolate(z, row, std::abs(opts.probes[q])));
        }
    };

    double sigma = 0.0;
    record(0.0, sigma);
    for (long j = 1; j <= n_t; ++j) {
        for (std::size_t i = 1; i < w; ++i) next[i] = row[i] + r * (row[i + 1] - 2.0 * row[i] + row[i - 1]);
        next[0] = row[0] + 2.0 * r * (row[1] - row[0]);  // half cell at the symmetry plane
        if (opts.closure == WallClosure::local) {
            // half cell at the wall: (h/2)(N_s' - N_s) = k (N_{w-1} - N_s)/h - (sigma' - sigma)
            const double free = row[w] + 2.0 * r * (row[w - 1] - row[w]);
            const double dsigma = (p.L * free - sigma) / (p.A / k + 2.0 * p.L / h + 1.0);
            next[w] = free - 2.0 * dsigma / h;
            sigma += dsigma;
        } else {
            sigma = apply_surface(next, sigma, grid, p, ts.inventory).sigma;
        }
        std::swap(row, next);
        record(j == n_t ? T : static_cast<double>(j) * k, sigma);
    }
    return ts;
}

ComparisonReport compare_engines(const TimeSeries& a, const TimeSeries& b, std::span<const double> tgrid,
                                 double tolerance) {
    if (a.size() == 0 || b.size() == 0) throw InvalidInput("compare_engines: empty series");
    if (tgrid.empty()) throw InvalidInput("compare_engines: empty time grid");
    const double lo = std::max(a.times.front(), b.times.front());
    const double hi = std::min(a.times.back(), b.times.back());
    const auto [tmin, tmax] = std::minmax_element(tgrid.begin(), tgrid.end());
    const double slack = 1e-12 * std::max(1.0, std::abs(hi));
    if (!(lo <= hi) || *tmin < lo - slack || *tmax > hi + slack) {
        std::ostringstream os;
        os << "compare_engines: time grid [" << *tmin << ", " << *tmax << "] is not covered by both series ["
           << lo << ", " << hi << "]";
        throw InvalidInput(os.str());
    }

    ComparisonReport rep;
    rep.tolerance = tolerance;
    rep.samples = tgrid.size();
    double sum2 = 0.0;
    for (double t : tgrid) {
        const double d = std::abs(a.sigma_at(t) - b.sigma_at(t));
        rep.max_sigma_deviation = std::max(rep.max_sigma_deviation, d);
        sum2 += d * d;
        for (std::size_t i = 0; i < a.probe_z.size(); ++i) {
            for (std::size_t j = 0; j < b.probe_z.size(); ++j) {
                if (std::abs(a.probe_z[i] - b.probe_z[j]) > 1e-12) continue;
                rep.max_probe_deviation =
                    std::max(rep.max_probe_deviation, std::abs(a.probe_at(i, t) - b.probe_at(j, t)));
            }
        }
    }
    rep.rms_sigma_deviation = std::sqrt(sum2 / static_cast<double>(tgrid.size()));
    for (double r : a.conservation_residual) rep.max_conservation_a = std::max(rep.max_conservation_a, r);
    for (double r : b.conservation_residual) rep.max_conservation_b = std::max(rep.max_conservation_b, r);
    rep.pass = rep.max_sigma_deviation <= tolerance;
    return rep;
}

std::vector<double> audit_kinetics(const TimeSeries& s, const Params& p) {
    if (s.surface.size() != s.size()) throw InvalidInput("audit_kinetics: series lacks wall densities");
    std::vector<double> out;
    if (s.size() < 2) return out;
    out.reserve(s.size() - 1);
    for (std::size_t j = 1; j < s.size(); ++j) {
        const double dt = s.times[j] - s.times[j - 1];
        out.push_back(p.A * (s.sigma[j] - s.sigma[j - 1]) / dt - p.L * s.surface[j] + s.sigma[j]);
    }
    return out;
}

std::vector<double> audit_conservation(const TimeSeries& s) {
    if (s.profiles.empty() || s.profile_z.size() < 2) {
        throw InvalidInput("audit_conservation: series has no stored profiles");
    }
    std::vector<double> out;
    out.reserve(s.profiles.size());
    for (std::size_t r = 0; r < s.profiles.size(); ++r) {
        const auto& row = s.profiles[r];
        double half = 0.0;
        for (std::size_t i = 1; i < row.size(); ++i) {
            half += 0.5 * (s.profile_z[i] - s.profile_z[i - 1]) * (row[i] + row[i - 1]);
        }
        out.push_back(std::abs(2.0 * half + 2.0 * s.sigma_at(s.profile_times[r]) - s.inventory));
    }
    return out;
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t n) {
    if (n < 2) return {t0};
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n - 1);
    g.back() = t1;
    return g;
}

}  // namespace hyperads

namespace hyperads {

std::optional<double> first_local_maximum(const std::vector<double>& times, const std::vector<double>& values,
                                          double t_begin, double t_end, double drop) {
    if (times.size() != values.size()) throw InvalidInput("first_local_maximum: size mismatch");
    std::optional<std::size_t> best;
    bool rose = false;  // a maximum needs a rise before the drop
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < t_begin || times[i] > t_end) continue;
        if (!best) {
            best = i;
        } else if (values[i] > values[*best]) {
            best = i;
            rose = true;
        } else if (values[i] < values[*best] - drop) {
            if (rose) return times[*best];
            best = i;
        }
    }
    return std::nullopt;
}

}  // namespace hyperads
