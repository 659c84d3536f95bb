// Command-line front end: run, sweep, compare, eigen-dump.

#include <CLI11.hpp>
#include <iostream>

#include "hyperads/config.hpp"
#include "hyperads/error.hpp"
#include "hyperads/run.hpp"

using namespace hyperads;

namespace {

template <class Enum, class Parse>
CLI::Option* add_enum(CLI::App& app, const std::string& name, Enum& target, Parse parse, const std::string& help) {
    return app
        .add_option_function<std::string>(
            name, [&target, parse](const std::string& s) { target = parse(s); }, help)
        ->type_name("NAME");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adsorption with relaxing (Cattaneo) diffusion in a slab"};
    app.require_subcommand(1);
    app.set_config("--config", "", "INI key=value file; flags win over file values");

    RunConfig cfg;

    // Options live on the root so one config file serves every subcommand.
    app.add_option("--A", cfg.params.A, "desorption time over diffusion time");
    app.add_option("--B", cfg.params.B, "relaxation time over diffusion time");
    app.add_option("--L", cfg.params.L, "adsorption length over thickness");
    app.add_option("--N0", cfg.params.N0, "total dimensionless mass");

    PhysicalInputs phys;
    auto* pd = app.add_option("--thickness", phys.d, "slab thickness d");
    auto* pD = app.add_option("--diffusivity", phys.D, "diffusion coefficient D");
    auto* pr = app.add_option("--tau-r", phys.tau_r, "relaxation time");
    auto* pa = app.add_option("--tau-a", phys.tau_a, "desorption time");
    auto* pk = app.add_option("--k-a", phys.k_a, "adsorption rate constant");
    auto* pn = app.add_option("--n0", phys.n0, "initial bulk density");
    for (auto* o : {pd, pD, pr, pa, pk}) o->needs(pn);
    for (auto* o : {pD, pr, pa, pk, pn}) o->needs(pd);

    add_enum(app, "--ic", cfg.ic, parse_ic_kind, "step | parabolic | sampled");
    app.add_option("--ic-file", cfg.ic_file, "z,value table for --ic sampled");
    add_enum(app, "--engine", cfg.engine, parse_engine, "spectral | fdm | parabolic | compare");
    app.add_option("--modes", cfg.mode_count, "spectral mode count");
    app.add_option("--nz", cfg.n_z, "FDM intervals on the half slab");
    app.add_option("--lambda", cfg.lambda, "FDM time step over space step (0 = automatic)");
    app.add_option("--nt", cfg.n_t, "FDM time steps (overrides --lambda)");
    auto* t_opt = app.add_option("--T", cfg.T, "time horizon in diffusion times");
    app.add_option("--parabolic-nz", cfg.parabolic_n_z, "parabolic oracle intervals");
    app.add_option("--probes", cfg.probes, "probe positions z*")->delimiter(',');
    app.add_option("--samples", cfg.samples, "emitted time samples");
    app.add_option("--output-dir,-o", cfg.output_dir, "artifact directory")->envname("HYPERADS_OUTPUT_DIR");
    app.add_option("--name", cfg.name, "artifact file stem");
    app.add_flag("--diagnostics", cfg.diagnostics, "also write the eigen-equation table");

    app.add_option("--alpha-min", cfg.alpha_min, "eigen table start");
    app.add_option("--alpha-max", cfg.alpha_max, "eigen table end");
    app.add_option("--alpha-step", cfg.alpha_step, "eigen table spacing");

    add_enum(app, "--axis", cfg.axis, parse_axis, "A | B | L | N0");
    app.add_option("--values", cfg.sweep_values, "sweep values")->delimiter(',');
    app.add_option("--jobs,-j", cfg.jobs, "concurrent sweep points");

    std::vector<std::string> pair;
    app.add_option("--engines", pair, "engine pair for compare, e.g. spectral,fdm")->delimiter(',')->expected(2);
    app.add_option("--t0", cfg.compare_t0, "comparison window start");
    app.add_option("--tolerance", cfg.compare_tolerance, "allowed max deviation as a fraction of sigma_eq");

    auto* run_cmd = app.add_subcommand("run", "solve once and write series CSV and diagnostics JSON");
    auto* sweep_cmd = app.add_subcommand("sweep", "solve over a parameter axis");
    auto* cmp_cmd = app.add_subcommand("compare", "cross-check two engines");
    auto* dump_cmd = app.add_subcommand("eigen-dump", "tabulate the eigenvalue equation and its roots");
    for (auto* s : {run_cmd, sweep_cmd, cmp_cmd, dump_cmd}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (pd->count() > 0) cfg.physical = phys;
        cfg.T_explicit = t_opt->count() > 0;
        if (!pair.empty()) {
            cfg.compare_a = parse_engine(pair[0]);
            cfg.compare_b = parse_engine(pair[1]);
        }
        Artifacts art;
        if (*run_cmd) {
            art = run(cfg);
        } else if (*sweep_cmd) {
            art = run_sweep(cfg);
        } else if (*cmp_cmd) {
            cfg.engine = Engine::compare;
            art = run_compare(cfg);
        } else {
            art = run_eigen_dump(cfg);
        }
        for (const auto& f : art.files) std::cout << f << '\n';
        if (art.status == 3) std::cerr << "comparison outside tolerance\n";
        return art.status;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
