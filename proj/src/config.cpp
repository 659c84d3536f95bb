#include "hyperads/config.hpp"

#include <cmath>
#include <sstream>

#include "hyperads/error.hpp"

namespace hyperads {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& msg) {
    throw InvalidInput("config field '" + field + "': " + msg);
}

}  // namespace

Engine parse_engine(const std::string& s) {
    if (s == "spectral") return Engine::spectral;
    if (s == "fdm") return Engine::fdm;
    if (s == "parabolic") return Engine::parabolic;
    if (s == "compare") return Engine::compare;
    field_error("engine", "unknown engine '" + s + "' (spectral, fdm, parabolic, compare)");
}

SweepAxis parse_axis(const std::string& s) {
    if (s == "none" || s.empty()) return SweepAxis::none;
    if (s == "A") return SweepAxis::A;
    if (s == "B") return SweepAxis::B;
    if (s == "L") return SweepAxis::L;
    if (s == "N0") return SweepAxis::N0;
    field_error("axis", "unknown sweep axis '" + s + "' (A, B, L, N0, none)");
}

InitialCondition::Kind parse_ic_kind(const std::string& s) {
    if (s == "step") return InitialCondition::Kind::step;
    if (s == "parabolic") return InitialCondition::Kind::parabolic;
    if (s == "sampled") return InitialCondition::Kind::sampled;
    field_error("ic", "unknown initial condition '" + s + "' (step, parabolic, sampled)");
}

std::string to_string(Engine e) {
    switch (e) {
        case Engine::spectral: return "spectral";
        case Engine::fdm: return "fdm";
        case Engine::parabolic: return "parabolic";
        case Engine::compare: return "compare";
    }
    return "?";
}

std::string to_string(SweepAxis a) {
    switch (a) {
        case SweepAxis::none: return "none";
        case SweepAxis::A: return "A";
        case SweepAxis::B: return "B";
        case SweepAxis::L: return "L";
        case SweepAxis::N0: return "N0";
    }
    return "?";
}

std::string to_string(InitialCondition::Kind k) {
    switch (k) {
        case InitialCondition::Kind::step: return "step";
        case InitialCondition::Kind::parabolic: return "parabolic";
        case InitialCondition::Kind::sampled: return "sampled";
    }
    return "?";
}

Params RunConfig::resolved_params() const { return physical ? from_physical(*physical) : params; }

void RunConfig::validate() const {
    if (physical) {
        try {
            resolved_params().validate();
        } catch (const InvalidInput& e) {
            field_error("physical", e.what());
        }
    } else {
        if (!(params.A > 0.0) || !std::isfinite(params.A)) field_error("A", "must be finite and > 0");
        if (!(params.B >= 0.0) || !std::isfinite(params.B)) field_error("B", "must be finite and >= 0");
        if (!(params.L >= 0.0) || !std::isfinite(params.L)) field_error("L", "must be finite and >= 0");
        if (!(params.N0 > 0.0) || !std::isfinite(params.N0)) field_error("N0", "must be finite and > 0");
    }
    if (ic == InitialCondition::Kind::sampled && ic_file.empty()) field_error("ic_file", "required for sampled data");
    if (mode_count < 1) field_error("modes", "must be >= 1");
    if (n_z < 8) field_error("nz", "must be >= 8");
    if (parabolic_n_z < 8) field_error("parabolic_nz", "must be >= 8");
    if (lambda < 0.0) field_error("lambda", "must be >= 0");
    if (n_t < 0) field_error("nt", "must be >= 0");
    if (!(T > 0.0) || !std::isfinite(T)) field_error("T", "must be > 0");
    for (double z : probes) {
        if (!(std::abs(z) <= 0.5)) {
            std::ostringstream os;
            os << "probe " << z << " outside [-1/2, 1/2]";
            field_error("probes", os.str());
        }
    }
    if (samples < 2) field_error("samples", "must be >= 2");
    if (output_dir.empty()) field_error("out", "must not be empty");
    if (name.empty()) field_error("name", "must not be empty");
    if (!(alpha_min > 0.0) || !(alpha_max > alpha_min) || !(alpha_step > 0.0)) {
        field_error("alpha", "need 0 < alpha_min < alpha_max and alpha_step > 0");
    }
    if (axis != SweepAxis::none && sweep_values.empty()) field_error("values", "sweep needs at least one value");
    if (jobs < 1) field_error("jobs", "must be >= 1");
    if (compare_a == Engine::compare || compare_b == Engine::compare) {
        field_error("engines", "compare needs two concrete engines");
    }
    if (!(compare_t0 >= 0.0) || !(compare_t0 < T)) field_error("compare_t0", "must lie in [0, T)");
    if (!(compare_tolerance > 0.0)) field_error("tolerance", "must be > 0");
}

}  // namespace hyperads
