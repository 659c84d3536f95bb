#include "hyperads/run.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "hyperads/csv.hpp"
#include "hyperads/eigen.hpp"
#include "hyperads/error.hpp"
#include "hyperads/fdm.hpp"
#include "hyperads/spectral.hpp"
#include "hyperads/validate.hpp"

namespace hyperads {

using nlohmann::json;

namespace {

json params_json(const Params& p) { return {{"A", p.A}, {"B", p.B}, {"L", p.L}, {"N0", p.N0}}; }

std::string base_path(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.output_dir);
    return (std::filesystem::path(cfg.output_dir) / cfg.name).string();
}

std::vector<std::string> preamble(const RunConfig& cfg, const std::string& what) {
    std::vector<std::string> lines{"hyperads " + what};
    const json echo = config_to_json(cfg);
    for (const auto& [key, value] : echo.items()) lines.push_back(key + "=" + value.dump());
    return lines;
}

void write_json(const json& j, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open '" + path + "' for writing");
    os << j.dump(2) << '\n';
    if (!os) throw Error("write to '" + path + "' failed");
}

InitialCondition make_ic(const RunConfig& cfg) {
    switch (cfg.ic) {
        case InitialCondition::Kind::step: return InitialCondition::step();
        case InitialCondition::Kind::parabolic: return InitialCondition::parabolic();
        case InitialCondition::Kind::sampled: {
            auto [z, v] = read_profile_csv(cfg.ic_file);
            return InitialCondition::sampled(std::move(z), std::move(v));
        }
    }
    throw InvalidInput("unknown initial condition");
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

json landmark_json(const TimeSeries& s, const Params& p) {
    const double drop = 1e-9 * std::max(equilibrium(p).sigma, 1e-300);
    const auto peak = first_local_maximum(s.times, s.sigma, 0.0, s.times.back(), drop);
    return {{"final_sigma", s.sigma.back()},
            {"final_surface_density", s.surface.back()},
            {"first_sigma_maximum", peak ? json(*peak) : json(nullptr)},
            {"sigma_monotonic", !peak.has_value()}};
}

TimeSeries emitted(const RunConfig& cfg, const TimeSeries& s) {
    const std::size_t stride = s.size() > cfg.samples ? (s.size() - 1) / (cfg.samples - 1) : 1;
    return s.thinned(stride);
}

Grid fdm_grid(const RunConfig& cfg, const Params& p) {
    if (cfg.n_t > 0) return Grid::from_steps(cfg.n_z, cfg.n_t, cfg.T);
    const double lambda = cfg.lambda > 0.0 ? cfg.lambda : default_lambda(p);
    return Grid::from_lambda(cfg.n_z, lambda, cfg.T);
}

std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string value_label(double v) {
    std::string s = shortest(v);
    for (auto& c : s) {
        if (c == '+') c = 'p';
    }
    return s;
}

}  // namespace

json config_to_json(const RunConfig& cfg) {
    json j;
    j["params"] = params_json(cfg.resolved_params());
    if (cfg.physical) {
        const auto& ph = *cfg.physical;
        j["physical"] = {{"d", ph.d},         {"D", ph.D},     {"tau_r", ph.tau_r},
                         {"tau_a", ph.tau_a}, {"k_a", ph.k_a}, {"n0", ph.n0}};
    }
    j["ic"] = to_string(cfg.ic);
    if (!cfg.ic_file.empty()) j["ic_file"] = cfg.ic_file;
    j["engine"] = to_string(cfg.engine);
    j["modes"] = cfg.mode_count;
    j["nz"] = cfg.n_z;
    j["lambda"] = cfg.lambda;
    j["nt"] = cfg.n_t;
    j["T"] = cfg.T;
    j["parabolic_nz"] = cfg.parabolic_n_z;
    j["probes"] = cfg.probes;
    j["samples"] = cfg.samples;
    j["name"] = cfg.name;
    j["axis"] = to_string(cfg.axis);
    if (cfg.axis != SweepAxis::none) j["values"] = cfg.sweep_values;
    if (cfg.engine == Engine::compare) {
        j["engines"] = {to_string(cfg.compare_a), to_string(cfg.compare_b)};
        j["compare_t0"] = cfg.compare_t0;
        j["tolerance"] = cfg.compare_tolerance;
    }
    return j;
}

EngineRun solve_engine(const RunConfig& cfg, Engine engine) {
    cfg.validate();
    const Params p = cfg.resolved_params();
    const InitialCondition ic = make_ic(cfg);
    EngineRun out;
    json& d = out.diagnostics;
    d["engine"] = to_string(engine);
    d["params"] = params_json(p);
    const auto eq = equilibrium(p);
    d["equilibrium"] = {{"density", eq.density}, {"sigma", eq.sigma}};

    switch (engine) {
        case Engine::spectral: {
            const auto sol = solve_spectral(p, ic, cfg.mode_count);
            const auto times = uniform_grid(0.0, cfg.T, cfg.samples);
            out.series = sample_series(sol, times, cfg.probes);
            json modes = json::array();
            for (std::size_t i = 0; i < sol.modes().size(); ++i) {
                const auto& m = sol.modes()[i];
                const auto& a = sol.amplitudes()[i];
                modes.push_back({{"alpha", m.alpha},
                                 {"anchor", m.index},
                                 {"mu1", {m.exponents.mu1.real(), m.exponents.mu1.imag()}},
                                 {"mu2", {m.exponents.mu2.real(), m.exponents.mu2.imag()}},
                                 {"C", sol.projection()[i]},
                                 {"S1", {a.S1.real(), a.S1.imag()}},
                                 {"S2", {a.S2.real(), a.S2.imag()}}});
            }
            const auto& diag = sol.diagnostics();
            double kinetic = 0.0;
            for (double t : times) {
                if (t > 0.0) kinetic = std::max(kinetic, std::abs(sol.kinetic_residual(t)));
            }
            d["modes"] = std::move(modes);
            d["gram_condition"] = diag.gram_condition;
            d["orthogonality_residual"] = diag.orthogonality_residual;
            d["reconstruction_error"] = diag.reconstruction_error;
            d["initial_sigma"] = diag.initial_sigma;
            d["initial_sigma_rate"] = sol.sigma_rate(0.0);
            d["max_imag_residue"] = diag.max_imag_residue;
            d["max_mass_residual"] = max_abs(out.series.conservation_residual);
            d["max_kinetic_residual"] = kinetic;
            break;
        }
        case Engine::fdm: {
            const Grid grid = fdm_grid(cfg, p);
            FdmOptions opts;
            opts.probes = cfg.probes;
            auto res = run_fdm(p, ic, grid, opts);
            out.series = std::move(res.series);
            d["grid"] = {{"nz", grid.n_z}, {"nt", grid.n_t}, {"h", grid.h},
                         {"k", grid.k},    {"lambda", grid.lambda}, {"T", grid.T}};
            d["inventory"] = out.series.inventory;
            d["max_conservation_residual"] = res.max_conservation_residual;
            d["max_kinetic_residual"] = max_abs(audit_kinetics(out.series, p));
            d["regular_initial_rate"] = res.regular_initial_rate;
            break;
        }
        case Engine::parabolic: {
            ParabolicOptions opts;
            opts.probes = cfg.probes;
            out.series = run_parabolic(p, ic, cfg.parabolic_n_z, cfg.T, opts);
            d["nz"] = cfg.parabolic_n_z;
            d["inventory"] = out.series.inventory;
            d["max_conservation_residual"] = max_abs(out.series.conservation_residual);
            d["max_kinetic_residual"] = max_abs(audit_kinetics(out.series, p));
            break;
        }
        case Engine::compare:
            throw InvalidInput("solve_engine needs a concrete engine");
    }
    d["landmarks"] = landmark_json(out.series, p);
    return out;
}

Artifacts run(const RunConfig& cfg) {
    if (cfg.engine == Engine::compare) return run_compare(cfg);
    const EngineRun r = solve_engine(cfg, cfg.engine);
    const std::string base = base_path(cfg);
    Artifacts art;

    emit_series(emitted(cfg, r.series), base + ".csv", preamble(cfg, "series"));
    art.files.push_back(base + ".csv");

    json j = r.diagnostics;
    j["config"] = config_to_json(cfg);
    write_json(j, base + ".json");
    art.files.push_back(base + ".json");

    if (cfg.diagnostics) {
        const auto extra = run_eigen_dump(cfg);
        art.files.insert(art.files.end(), extra.files.begin(), extra.files.end());
    }
    return art;
}

Artifacts run_eigen_dump(const RunConfig& cfg) {
    cfg.validate();
    const Params p = cfg.resolved_params();
    std::vector<double> alphas;
    const auto n = static_cast<std::size_t>(std::floor((cfg.alpha_max - cfg.alpha_min) / cfg.alpha_step + 1e-9));
    for (std::size_t i = 0; i <= n; ++i) alphas.push_back(cfg.alpha_min + static_cast<double>(i) * cfg.alpha_step);

    const std::string base = base_path(cfg) + "_eigen";
    std::ofstream os(base + ".csv", std::ios::binary);
    if (!os) throw Error("cannot open '" + base + ".csv' for writing");
    write_eigen_dump_csv(os, eigen_dump(p, alphas), preamble(cfg, "eigen dump"));
    os.close();

    json j;
    j["config"] = config_to_json(cfg);
    j["alpha_critical"] = std::isfinite(alpha_critical(p)) ? json(alpha_critical(p)) : json(nullptr);
    json roots = json::array();
    if (p.B > 0.0) {
        for (const auto& m : find_eigenvalues(p, cfg.mode_count)) {
            roots.push_back({{"alpha", m.alpha}, {"anchor", m.index}, {"oscillatory", m.exponents.oscillatory()}});
        }
    }
    j["eigenvalues"] = std::move(roots);
    write_json(j, base + ".json");
    return {{base + ".csv", base + ".json"}, 0};
}

Artifacts run_compare(const RunConfig& cfg) {
    cfg.validate();
    const Params p = cfg.resolved_params();
    const EngineRun a = solve_engine(cfg, cfg.compare_a);
    const EngineRun b = solve_engine(cfg, cfg.compare_b);
    const auto tgrid = uniform_grid(cfg.compare_t0, cfg.T, 401);
    const double sigma_eq = equilibrium(p).sigma;
    ComparisonReport rep = compare_engines(a.series, b.series, tgrid, cfg.compare_tolerance * sigma_eq);
    rep.params = p;
    rep.engine_a = to_string(cfg.compare_a);
    rep.engine_b = to_string(cfg.compare_b);

    const std::string base = base_path(cfg);
    Artifacts art;
    for (const auto* r : {&a, &b}) {
        const std::string path = base + "_" + r->diagnostics["engine"].get<std::string>() + ".csv";
        emit_series(emitted(cfg, r->series), path, preamble(cfg, "series"));
        art.files.push_back(path);
    }

    json j;
    j["config"] = config_to_json(cfg);
    j["engines"] = {rep.engine_a, rep.engine_b};
    j["params"] = params_json(p);
    j["t_range"] = {cfg.compare_t0, cfg.T};
    j["samples"] = rep.samples;
    j["tolerance"] = rep.tolerance;
    j["max_sigma_deviation"] = rep.max_sigma_deviation;
    j["rms_sigma_deviation"] = rep.rms_sigma_deviation;
    j["max_probe_deviation"] = rep.max_probe_deviation;
    j["max_conservation_residual"] = {rep.max_conservation_a, rep.max_conservation_b};
    j["pass"] = rep.pass;
    j["diagnostics"] = {a.diagnostics, b.diagnostics};
    write_json(j, base + "_compare.json");
    art.files.push_back(base + "_compare.json");

    std::ofstream txt(base + "_compare.txt", std::ios::binary);
    txt << rep.engine_a << " vs " << rep.engine_b << " at A=" << shortest(p.A) << " B=" << shortest(p.B)
        << " L=" << shortest(p.L) << " N0=" << shortest(p.N0) << '\n'
        << "max |dsigma| = " << shortest(rep.max_sigma_deviation) << " ("
        << shortest(rep.max_sigma_deviation / sigma_eq) << " sigma_eq)\n"
        << "rms |dsigma| = " << shortest(rep.rms_sigma_deviation) << '\n'
        << "max |dN| at probes = " << shortest(rep.max_probe_deviation) << '\n'
        << "tolerance = " << shortest(rep.tolerance) << ": " << (rep.pass ? "PASS" : "FAIL") << '\n';
    art.files.push_back(base + "_compare.txt");
    art.status = rep.pass ? 0 : 3;
    return art;
}

Artifacts run_sweep(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.axis == SweepAxis::none) throw InvalidInput("config field 'axis': sweep needs an axis");
    const Params base_params = cfg.resolved_params();

    std::vector<RunConfig> points;
    for (double v : cfg.sweep_values) {
        RunConfig c = cfg;
        c.physical.reset();
        c.params = base_params;
        switch (cfg.axis) {
            case SweepAxis::A: c.params.A = v; break;
            case SweepAxis::B: c.params.B = v; break;
            case SweepAxis::L: c.params.L = v; break;
            case SweepAxis::N0: c.params.N0 = v; break;
            case SweepAxis::none: break;
        }
        // slow waves at B >= 1 need a longer window
        if (cfg.axis == SweepAxis::B && v >= 1.0 && !cfg.T_explicit) c.T = 10.0;
        c.axis = SweepAxis::none;
        c.sweep_values.clear();
        c.name = cfg.name + "_" + to_string(cfg.axis) + "_" + value_label(v);
        c.validate();
        points.push_back(std::move(c));
    }

    std::vector<Artifacts> results(points.size());
    std::vector<json> summaries(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                results[i] = run(points[i]);
                // names only, so the summary does not depend on the output directory
                json names = json::array();
                for (const auto& f : results[i].files) names.push_back(std::filesystem::path(f).filename().string());
                summaries[i] = {{"value", cfg.sweep_values[i]}, {"files", std::move(names)}};
                if (points[i].engine == Engine::compare) summaries[i]["status"] = results[i].status;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int n_workers = std::min<int>(cfg.jobs, static_cast<int>(points.size()));
    std::vector<std::thread> pool;
    for (int w = 1; w < n_workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    Artifacts art;
    json j;
    j["config"] = config_to_json(cfg);
    j["points"] = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        // landmarks come from each point's diagnostics file
        if (points[i].engine != Engine::compare) {
            std::ifstream is(results[i].files[1]);
            const json d = json::parse(is);
            summaries[i]["landmarks"] = d["landmarks"];
            summaries[i]["T"] = points[i].T;
        }
        j["points"].push_back(summaries[i]);
        art.files.insert(art.files.end(), results[i].files.begin(), results[i].files.end());
        art.status = std::max(art.status, results[i].status);
    }
    const std::string path = base_path(cfg) + "_sweep.json";
    write_json(j, path);
    art.files.push_back(path);
    return art;
}

}  // namespace hyperads
