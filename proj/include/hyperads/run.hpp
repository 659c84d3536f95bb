#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "hyperads/config.hpp"
#include "hyperads/series.hpp"

namespace hyperads {

struct Artifacts {
    std::vector<std::string> files;
    int status = 0;  // 0 ok, 3 comparison outside tolerance
};

struct EngineRun {
    TimeSeries series;  // full resolution
    nlohmann::json diagnostics;
};

/// Resolved configuration, echoed into every artifact.
nlohmann::json config_to_json(const RunConfig& cfg);

/// Runs one engine for the configuration without writing anything.
EngineRun solve_engine(const RunConfig& cfg, Engine engine);

/// Series CSV plus diagnostics JSON (and the eigen table with --diagnostics).
/// Engine::compare dispatches to run_compare.
Artifacts run(const RunConfig& cfg);
Artifacts run_sweep(const RunConfig& cfg);
Artifacts run_compare(const RunConfig& cfg);
Artifacts run_eigen_dump(const RunConfig& cfg);

}  // namespace hyperads
