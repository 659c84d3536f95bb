#include "hyperads/csv.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hyperads/error.hpp"

namespace hyperads {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, sep)) out.push_back(cell);
    return out;
}

double parse_number(const std::string& s, std::size_t line_no) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) {
        throw InvalidInput("line " + std::to_string(line_no) + ": cannot parse number '" + s + "'");
    }
    return v;
}

void write_preamble(std::ostream& os, const std::vector<std::string>& preamble) {
    for (const auto& line : preamble) os << "# " << line << '\n';
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string probe_label(double z) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, z);
    return "N_at_" + std::string(buf, res.ptr);
}

void write_series_csv(std::ostream& os, const TimeSeries& s, const std::vector<std::string>& preamble) {
    for (std::size_t j = 1; j < s.size(); ++j) {
        if (!(s.times[j] > s.times[j - 1])) throw InvalidInput("series times must be strictly increasing");
    }
    write_preamble(os, preamble);
    os << "t_star,sigma";
    for (double z : s.probe_z) os << ',' << probe_label(z);
    os << '\n';
    for (std::size_t j = 0; j < s.size(); ++j) {
        os << format_double(s.times[j]) << ',' << format_double(s.sigma[j]);
        for (const auto& col : s.probe_values) os << ',' << format_double(col[j]);
        os << '\n';
    }
}

void emit_series(const TimeSeries& s, const std::string& path, const std::vector<std::string>& preamble) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open '" + path + "' for writing");
    write_series_csv(os, s, preamble);
    if (!os) throw Error("write to '" + path + "' failed");
}

TimeSeries read_series_csv(std::istream& is) {
    TimeSeries s;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto cells = split(line, ',');
        if (!header) {
            if (cells.size() < 2 || cells[0] != "t_star" || cells[1] != "sigma") {
                throw InvalidInput("series header must start with t_star,sigma");
            }
            for (std::size_t c = 2; c < cells.size(); ++c) {
                const std::string prefix = "N_at_";
                if (cells[c].rfind(prefix, 0) != 0) throw InvalidInput("bad probe column '" + cells[c] + "'");
                s.probe_z.push_back(parse_number(cells[c].substr(prefix.size()), line_no));
            }
            s.probe_values.assign(s.probe_z.size(), {});
            header = true;
            continue;
        }
        if (cells.size() != 2 + s.probe_z.size()) {
            throw InvalidInput("line " + std::to_string(line_no) + ": wrong column count");
        }
        s.times.push_back(parse_number(cells[0], line_no));
        s.sigma.push_back(parse_number(cells[1], line_no));
        for (std::size_t q = 0; q < s.probe_z.size(); ++q) {
            s.probe_values[q].push_back(parse_number(cells[2 + q], line_no));
        }
    }
    if (!header) throw InvalidInput("series file has no header");
    return s;
}

TimeSeries parse_series(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open '" + path + "'");
    return read_series_csv(is);
}

void write_eigen_dump_csv(std::ostream& os, const std::vector<EigenDumpRow>& rows,
                          const std::vector<std::string>& preamble) {
    write_preamble(os, preamble);
    os << "alpha,f1,f2,re_E,im_E\n";
    for (const auto& r : rows) {
        os << format_double(r.alpha) << ',' << format_double(r.f1) << ',' << format_double(r.f2) << ','
           << format_double(r.re_e) << ',' << format_double(r.im_e) << '\n';
    }
}

std::pair<std::vector<double>, std::vector<double>> read_profile_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open '" + path + "'");
    std::vector<double> z;
    std::vector<double> v;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto cells = split(line, ',');
        if (cells.size() != 2) throw InvalidInput(path + ":" + std::to_string(line_no) + ": expected z,value");
        // tolerate a textual header
        if (z.empty() && v.empty() && std::strtod(cells[0].c_str(), nullptr) == 0.0 &&
            cells[0].find_first_of("0123456789") == std::string::npos) {
            continue;
        }
        z.push_back(parse_number(cells[0], line_no));
        v.push_back(parse_number(cells[1], line_no));
    }
    return {std::move(z), std::move(v)};
}

}  // namespace hyperads
