#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hyperads/eigen.hpp"
#include "hyperads/series.hpp"

namespace hyperads {

/// Column label for a probe, e.g. "N_at_0.25" (shortest round-trip digits).
std::string probe_label(double z);

/// Writes `t_star,sigma,N_at_<z>...` with 17 significant digits. Each entry
/// of `preamble` becomes a leading "# " comment line. Throws InvalidInput if
/// times are not strictly increasing.
void write_series_csv(std::ostream& os, const TimeSeries& s, const std::vector<std::string>& preamble = {});
void emit_series(const TimeSeries& s, const std::string& path, const std::vector<std::string>& preamble = {});

/// Reads back times, sigma and probe columns; '#' lines are skipped.
TimeSeries read_series_csv(std::istream& is);
TimeSeries parse_series(const std::string& path);

void write_eigen_dump_csv(std::ostream& os, const std::vector<EigenDumpRow>& rows,
                          const std::vector<std::string>& preamble = {});

/// Two-column (z, value) table for sampled initial conditions.
std::pair<std::vector<double>, std::vector<double>> read_profile_csv(const std::string& path);

std::string format_double(double v);

}  // namespace hyperads
