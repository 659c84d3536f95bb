#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperads/params.hpp"

namespace hyperads {

enum class Engine { spectral, fdm, parabolic, compare };
enum class SweepAxis { none, A, B, L, N0 };

Engine parse_engine(const std::string& s);
SweepAxis parse_axis(const std::string& s);
InitialCondition::Kind parse_ic_kind(const std::string& s);
std::string to_string(Engine e);
std::string to_string(SweepAxis a);
std::string to_string(InitialCondition::Kind k);

/// Everything a run needs. Defaults reproduce the step-start problem over
/// t* in [0, 2].
struct RunConfig {
    Params params{0.01, 0.1, 1.0, 3.0};
    std::optional<PhysicalInputs> physical;  // overrides params when set

    InitialCondition::Kind ic = InitialCondition::Kind::step;
    std::string ic_file;  // z,value table for sampled data

    Engine engine = Engine::fdm;
    int mode_count = 50;

    int n_z = 400;
    double lambda = 0.0;  // 0 -> default_lambda(params)
    long n_t = 0;         // overrides lambda when > 0
    double T = 2.0;
    bool T_explicit = false;
    int parabolic_n_z = 200;

    std::vector<double> probes;
    std::size_t samples = 2001;  // emitted time samples (approximate for fdm)

    std::string output_dir = ".";
    std::string name = "run";
    bool diagnostics = false;

    // eigen-dump grid
    double alpha_min = 0.05;
    double alpha_max = 100.0;
    double alpha_step = 0.01;

    SweepAxis axis = SweepAxis::none;
    std::vector<double> sweep_values;
    int jobs = 1;

    // compare
    Engine compare_a = Engine::spectral;
    Engine compare_b = Engine::fdm;
    double compare_t0 = 0.05;
    double compare_tolerance = 0.05;  // fraction of sigma_eq

    /// Params after applying the physical inputs, if any.
    Params resolved_params() const;

    /// Throws InvalidInput naming the offending field.
    void validate() const;
};

}  // namespace hyperads
