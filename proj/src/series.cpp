#include "hyperads/series.hpp"

#include <algorithm>

#include "hyperads/error.hpp"

namespace hyperads {

double interpolate(const std::vector<double>& x, const std::vector<double>& y, double at) {
    if (x.empty() || x.size() != y.size()) throw InvalidInput("interpolate: bad series");
    if (at <= x.front()) return y.front();
    if (at >= x.back()) return y.back();
    const auto it = std::upper_bound(x.begin(), x.end(), at);
    const auto i = static_cast<std::size_t>(it - x.begin());
    const double t = (at - x[i - 1]) / (x[i] - x[i - 1]);
    return y[i - 1] + t * (y[i] - y[i - 1]);
}

TimeSeries TimeSeries::thinned(std::size_t stride) const {
    if (stride <= 1 || size() < 3) return *this;
    TimeSeries out;
    out.probe_z = probe_z;
    out.probe_values.resize(probe_values.size());
    out.profile_z = profile_z;
    out.profile_times = profile_times;
    out.profiles = profiles;
    out.inventory = inventory;
    auto keep = [&](std::size_t i) {
        out.times.push_back(times[i]);
        out.sigma.push_back(sigma[i]);
        if (i < surface.size()) out.surface.push_back(surface[i]);
        if (i < conservation_residual.size()) out.conservation_residual.push_back(conservation_residual[i]);
        for (std::size_t p = 0; p < probe_values.size(); ++p) out.probe_values[p].push_back(probe_values[p][i]);
    };
    for (std::size_t i = 0; i < size(); i += stride) keep(i);
    if ((size() - 1) % stride != 0) keep(size() - 1);
    return out;
}

double TimeSeries::sigma_at(double t) const { return interpolate(times, sigma, t); }

double TimeSeries::probe_at(std::size_t probe, double t) const {
    return interpolate(times, probe_values.at(probe), t);
}

}  // namespace hyperads
