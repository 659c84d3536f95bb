#include "hyperads/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperads/error.hpp"

namespace hyperads {

namespace {

double probe_value(std::span<const double> row, double h, double z) {
    const double x = std::min(std::abs(z), 0.5);
    const double pos = x / h;
    const auto i = std::min(static_cast<std::size_t>(pos), row.size() - 2);
    const double t = pos - static_cast<double>(i);
    return row[i] + t * (row[i + 1] - row[i]);
}

void check_row(std::span<const double> row, std::size_t step, double limit, double lambda) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (!std::isfinite(row[i]) || std::abs(row[i]) > limit) {
            std::ostringstream os;
            os << "explicit scheme diverged at step " << step << ", node " << i << " (lambda = " << lambda
               << "); reduce lambda";
            throw Instability(os.str(), step, i, lambda);
        }
    }
}

}  // namespace

Grid Grid::from_lambda(int n_z, double lambda, double T) {
    if (n_z < 1 || !(lambda > 0.0) || !(T > 0.0)) throw ConfigError("grid needs n_z >= 1, lambda > 0, T > 0");
    const double h = 0.5 / n_z;
    const auto n_t = static_cast<long>(std::ceil(T / (lambda * h) - 1e-9));
    return from_steps(n_z, std::max(1L, n_t), T);
}

Grid Grid::from_steps(int n_z, long n_t, double T) {
    if (n_z < 1 || n_t < 1 || !(T > 0.0)) throw ConfigError("grid needs n_z >= 1, n_t >= 1, T > 0");
    Grid g;
    g.n_z = n_z;
    g.n_t = n_t;
    g.T = T;
    g.h = 0.5 / n_z;
    g.k = T / static_cast<double>(n_t);
    g.lambda = g.k / g.h;
    return g;
}

std::vector<double> Grid::nodes() const {
    std::vector<double> z(static_cast<std::size_t>(n_z) + 1);
    for (int i = 0; i <= n_z; ++i) z[static_cast<std::size_t>(i)] = i * h;
    z.back() = 0.5;
    return z;
}

double default_lambda(const Params& p) { return std::min(0.5, 0.5 * std::sqrt(p.B)); }

double trapezoid(std::span<const double> row, double h) noexcept {
    if (row.size() < 2) return 0.0;
    double inner = 0.0;
    for (std::size_t i = 1; i + 1 < row.size(); ++i) inner += row[i];
    return h * (0.5 * (row.front() + row.back()) + inner);
}

void step_first(std::span<const double> row0, std::span<const double> g, std::span<double> row1,
                const Grid& grid, double B) {
    if (!(B > 0.0)) throw InvalidInput("hyperbolic scheme needs B > 0");
    const double side = grid.lambda * grid.lambda / (2.0 * B);
    const double rate = (2.0 * B - grid.k) * grid.k / (2.0 * B);
    for (std::size_t i = 1; i + 1 < row0.size(); ++i) {
        const double gi = g.empty() ? 0.0 : g[i];
        row1[i] = row0[i] + side * ((row0[i + 1] - row0[i]) - (row0[i] - row0[i - 1])) + rate * gi;
    }
}

// Increment form, so a constant state is reproduced bit for bit.
void step_interior(std::span<const double> prev, std::span<const double> prev2, std::span<double> out,
                   const Grid& grid, double B) {
    const double denom = 2.0 * B + grid.k;
    const double side = 2.0 * grid.lambda * grid.lambda / denom;
    const double back = (2.0 * B - grid.k) / denom;
    for (std::size_t i = 1; i + 1 < prev.size(); ++i) {
        const double lap = (prev[i + 1] - prev[i]) - (prev[i] - prev[i - 1]);
        out[i] = prev[i] + back * (prev[i] - prev2[i]) + side * lap;
    }
}

void apply_symmetry(std::span<double> row) noexcept {
    if (row.size() > 1) row[0] = row[1];
}

SurfaceUpdate apply_surface(std::span<double> row, double sigma_prev, const Grid& grid, const Params& p,
                            double inventory) {
    const double h = grid.h;
    // trapezoid without the wall node
    double partial = 0.5 * h * row.front();
    for (std::size_t i = 1; i + 1 < row.size(); ++i) partial += h * row[i];

    const double rate = p.A / grid.k;
    const double coef = 0.5 * h + p.L / (rate + 1.0);
    if (!(coef > 1e-14)) throw ConfigError("degenerate wall closure: h/2 + L k/(A + k) vanishes");
    const double free_mass = 0.5 * inventory - partial;
    const double ns = (free_mass - rate / (rate + 1.0) * sigma_prev) / coef;
    row.back() = ns;
    return {ns, free_mass - 0.5 * h * ns};
}

FdmResult run_fdm(const Params& p, const InitialCondition& ic, const Grid& grid, const FdmOptions& opts) {
    p.validate();
    ic.validate(p);
    if (!(p.B > 0.0)) throw InvalidInput("the hyperbolic finite-difference engine needs B > 0; use run_parabolic");
    if (grid.n_z < 8) throw ConfigError("grid needs n_z >= 8");
    const double max_lambda = opts.max_lambda > 0.0 ? opts.max_lambda : std::sqrt(p.B);
    if (grid.lambda > max_lambda * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "lambda = " << grid.lambda << " exceeds the stability bound " << max_lambda;
        throw ConfigError(os.str());
    }
    const auto n = static_cast<std::size_t>(grid.n_z) + 1;
    if (!opts.initial_rate.empty() && opts.initial_rate.size() != n) {
        throw InvalidInput("initial_rate must have n_z + 1 entries");
    }
    for (double z : opts.probes) {
        if (std::abs(z) > 0.5) throw InvalidInput("probe outside [-1/2, 1/2]");
    }

    const auto z = grid.nodes();
    std::vector<double> prev2 = sample_initial(ic, p, z);
    std::vector<double> prev(n, 0.0);
    std::vector<double> cur(n, 0.0);
    const double limit = opts.blowup_factor * std::max(1.0, p.N0);

    FdmResult result;
    result.grid = grid;
    TimeSeries& ts = result.series;
    ts.inventory = 2.0 * trapezoid(prev2, grid.h);
    ts.probe_z = opts.probes;
    ts.probe_values.assign(opts.probes.size(), {});
    if (opts.profile_stride > 0) ts.profile_z = z;
    const auto steps = static_cast<std::size_t>(grid.n_t) + 1;
    ts.times.reserve(steps);
    ts.sigma.reserve(steps);
    ts.surface.reserve(steps);
    ts.conservation_residual.reserve(steps);

    if (!opts.initial_rate.empty()) {
        result.compatibility_residual =
            2.0 * trapezoid(opts.initial_rate, grid.h) + 2.0 * (p.L / p.A) * prev2.back();
        result.regular_initial_rate = std::all_of(opts.initial_rate.begin(), opts.initial_rate.end(),
                                                  [](double v) { return v == 0.0; });
    }

    auto record = [&](std::size_t j, std::span<const double> row, double sigma) {
        const double resid = std::abs(2.0 * trapezoid(row, grid.h) + 2.0 * sigma - ts.inventory);
        ts.times.push_back(j == steps - 1 ? grid.T : static_cast<double>(j) * grid.k);
        ts.sigma.push_back(sigma);
        ts.surface.push_back(row.back());
        ts.conservation_residual.push_back(resid);
        result.max_conservation_residual = std::max(result.max_conservation_residual, resid);
        for (std::size_t q = 0; q < opts.probes.size(); ++q) {
            ts.probe_values[q].push_back(probe_value(row, grid.h, opts.probes[q]));
        }
        if (opts.profile_stride > 0 && (j % opts.profile_stride == 0 || j == steps - 1)) {
            ts.profile_times.push_back(ts.times.back());
            ts.profiles.emplace_back(row.begin(), row.end());
        }
    };

    double sigma = 0.0;
    record(0, prev2, sigma);

    step_first(prev2, opts.initial_rate, prev, grid, p.B);
    apply_symmetry(prev);
    sigma = apply_surface(prev, sigma, grid, p, ts.inventory).sigma;
    check_row(prev, 1, limit, grid.lambda);
    record(1, prev, sigma);

    for (std::size_t j = 2; j < steps; ++j) {
        step_interior(prev, prev2, cur, grid, p.B);
        apply_symmetry(cur);
        sigma = apply_surface(cur, sigma, grid, p, ts.inventory).sigma;
        check_row(cur, j, limit, grid.lambda);
        record(j, cur, sigma);
        std::swap(prev2, prev);
        std::swap(prev, cur);
    }
    return result;
}

}  // namespace hyperads
