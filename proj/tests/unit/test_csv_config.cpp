#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperads/config.hpp"
#include "hyperads/csv.hpp"
#include "hyperads/error.hpp"
#include "hyperads/run.hpp"

using namespace hyperads;

namespace {

TimeSeries awkward_series() {
    TimeSeries s;
    s.probe_z = {0.0, 0.25, -0.125};
    s.probe_values.assign(3, {});
    double t = 0.0;
    for (int i = 0; i < 50; ++i) {
        s.times.push_back(t);
        s.sigma.push_back(std::sin(t) / 3.0 + 1e-300 * i);
        s.surface.push_back(0.0);
        s.conservation_residual.push_back(0.0);
        s.probe_values[0].push_back(0.1 * i + 1.0 / 7.0);
        s.probe_values[1].push_back(-std::exp(-t) * 1e17);
        s.probe_values[2].push_back(std::nextafter(1.0, 2.0) * i);
        t = std::nextafter(t + 0.1 / 3.0, 1e9);
    }
    return s;
}

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "hyperads_unit";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Csv, RoundTripIsBitExact) {
    const auto s = awkward_series();
    std::stringstream io;
    write_series_csv(io, s, {"provenance line", "A=0.01"});
    const auto back = read_series_csv(io);
    ASSERT_EQ(back.size(), s.size());
    ASSERT_EQ(back.probe_z.size(), 3u);
    for (std::size_t j = 0; j < s.size(); ++j) {
        EXPECT_TRUE(bit_equal(back.times[j], s.times[j]));
        EXPECT_TRUE(bit_equal(back.sigma[j], s.sigma[j]));
        for (std::size_t q = 0; q < 3; ++q) EXPECT_TRUE(bit_equal(back.probe_values[q][j], s.probe_values[q][j]));
    }
    for (std::size_t q = 0; q < 3; ++q) EXPECT_TRUE(bit_equal(back.probe_z[q], s.probe_z[q]));
}

TEST(Csv, HeaderAndTwoColumnForm) {
    TimeSeries s;
    s.times = {0.0, 0.5};
    s.sigma = {0.0, 0.25};
    s.surface = {0.0, 0.0};
    s.conservation_residual = {0.0, 0.0};
    std::stringstream io;
    write_series_csv(io, s);
    std::string header, row;
    std::getline(io, header);
    std::getline(io, row);
    EXPECT_EQ(header, "t_star,sigma");
    EXPECT_EQ(row, "0,0");
    EXPECT_EQ(probe_label(0.25), "N_at_0.25");
    EXPECT_EQ(probe_label(-0.1), "N_at_-0.1");
}

TEST(Csv, RejectsNonIncreasingTimes) {
    TimeSeries s;
    s.times = {0.0, 0.0};
    s.sigma = {0.0, 0.0};
    std::stringstream io;
    EXPECT_THROW(write_series_csv(io, s), InvalidInput);
}

TEST(Csv, FileErrorsNameThePath) {
    try {
        emit_series(awkward_series(), "/nonexistent-dir/x.csv");
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/x.csv"), std::string::npos);
    }
    EXPECT_THROW(parse_series("/nonexistent-dir/x.csv"), Error);
}

TEST(Csv, ProfileTable) {
    const auto path = scratch("profile.csv");
    std::ofstream(path) << "z,N\n0,6\n0.25,3\n0.5,0\n";
    const auto [z, v] = read_profile_csv(path.string());
    ASSERT_EQ(z.size(), 3u);
    EXPECT_EQ(z[1], 0.25);
    EXPECT_EQ(v[0], 6.0);
}

TEST(Config, FieldLevelErrors) {
    auto expect_field = [](RunConfig c, const std::string& field) {
        try {
            c.validate();
            FAIL() << "expected an error for " << field;
        } catch (const InvalidInput& e) {
            EXPECT_NE(std::string(e.what()).find("'" + field + "'"), std::string::npos) << e.what();
        }
    };
    RunConfig c;
    EXPECT_NO_THROW(c.validate());
    c.params.B = -1.0;
    expect_field(c, "B");
    c = {};
    c.params.A = 0.0;
    expect_field(c, "A");
    c = {};
    c.probes = {0.2, 0.7};
    expect_field(c, "probes");
    c = {};
    c.n_z = 2;
    expect_field(c, "nz");
    c = {};
    c.T = 0.0;
    expect_field(c, "T");
    c = {};
    c.ic = InitialCondition::Kind::sampled;
    expect_field(c, "ic_file");
    c = {};
    c.mode_count = 0;
    expect_field(c, "modes");
}

TEST(Config, EnumNamesRoundTrip) {
    for (auto e : {Engine::spectral, Engine::fdm, Engine::parabolic, Engine::compare})
        EXPECT_EQ(parse_engine(to_string(e)), e);
    for (auto a : {SweepAxis::none, SweepAxis::A, SweepAxis::B, SweepAxis::L, SweepAxis::N0})
        EXPECT_EQ(parse_axis(to_string(a)), a);
    EXPECT_THROW(parse_engine("euler"), InvalidInput);
    EXPECT_THROW(parse_axis("C"), InvalidInput);
}

TEST(Config, PhysicalInputsOverrideGroups) {
    RunConfig c;
    c.physical = PhysicalInputs{1.0, 1.0, 0.1, 0.01, 100.0, 3.0};
    const Params p = c.resolved_params();
    EXPECT_DOUBLE_EQ(p.A, 0.01);
    EXPECT_DOUBLE_EQ(p.B, 0.1);
    EXPECT_DOUBLE_EQ(p.L, 1.0);
    EXPECT_DOUBLE_EQ(p.N0, 3.0);
}

TEST(Run, ArtifactsEmbedConfigAndAreDeterministic) {
    RunConfig c;
    c.engine = Engine::spectral;
    c.T = 0.5;
    c.samples = 51;
    c.probes = {0.0};
    c.output_dir = scratch("run").string();
    c.name = "a";
    const auto first = run(c);
    ASSERT_EQ(first.files.size(), 2u);
    std::ifstream csv(first.files[0]);
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line.rfind("# ", 0), 0u);
    const auto s = parse_series(first.files[0]);
    EXPECT_EQ(s.size(), 51u);
    std::ifstream js(first.files[1]);
    const auto j = nlohmann::json::parse(js);
    EXPECT_EQ(j["config"]["params"]["A"].get<double>(), c.params.A);
    EXPECT_EQ(j["config"]["engine"], "spectral");

    auto slurp = [](const std::string& f) {
        std::ifstream is(f, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(is), {});
    };
    const std::string csv1 = slurp(first.files[0]), json1 = slurp(first.files[1]);
    const auto second = run(c);
    EXPECT_EQ(slurp(second.files[0]), csv1);
    EXPECT_EQ(slurp(second.files[1]), json1);
}

TEST(Run, CompareReportsStatus) {
    RunConfig c;
    c.engine = Engine::compare;
    c.params.A = 1e-3;
    c.output_dir = scratch("cmp").string();
    c.name = "c";
    const auto ok = run(c);
    EXPECT_EQ(ok.status, 0);
    c.compare_tolerance = 1e-6;
    const auto bad = run(c);
    EXPECT_EQ(bad.status, 3);
}

TEST(Run, FastDesorptionCsvStartsFlat) {
    // same settings as the documented fast-desorption command
    RunConfig c;
    c.engine = Engine::spectral;
    c.params = {1e-3, 0.1, 1.0, 3.0};
    c.output_dir = scratch("fast_des").string();
    c.name = "fast_des";
    const auto s = parse_series(run(c).files[0]);
    const double dt = s.times[1] - s.times[0];
    // one-sided second-order slope at t* = 0 against the steepest early slope
    const double start = (-3 * s.sigma[0] + 4 * s.sigma[1] - s.sigma[2]) / (2 * dt);
    double steepest = 0.0;
    for (std::size_t j = 1; s.times[j] <= 0.1; ++j) steepest = std::max(steepest, (s.sigma[j] - s.sigma[j - 1]) / dt);
    EXPECT_LT(std::abs(start), 0.05 * steepest) << start << " vs " << steepest;
}
