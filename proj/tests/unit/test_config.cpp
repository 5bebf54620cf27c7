#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "config.hpp"
#include "se2frame/framefield.hpp"

namespace se2frame::cli {
namespace {

TEST(ParseConfig, SmallBallExperiment) {
  const ExperimentConfig c =
      parse_config(R"({"p":0.5,"sigma":0.6366,"rho":0.7071,"num_angles":4})");
  EXPECT_EQ(c.p, 0.5);
  EXPECT_EQ(c.sigma, 0.6366);
  EXPECT_EQ(c.rho, 0.7071);
  EXPECT_EQ(c.num_angles, 4);
  EXPECT_EQ(c.lattice_basis, Mat2::Identity());
  EXPECT_EQ(c.grid, 256);
  EXPECT_EQ(c.repetitions, 20);
  EXPECT_EQ(c.seed, 0u);
  const SamplingSpec spec = make_sampling_spec(c);
  EXPECT_EQ(spec.num_angles(), 4);
  EXPECT_FALSE(spec.has_shifts());
  EXPECT_DOUBLE_EQ(spec.angles[1], M_PI / 2);
}

TEST(ParseConfig, ShapeFactor) {
  const ExperimentConfig c = parse_config(R"({"p":0.5,"p_sigma":0.2})");
  EXPECT_DOUBLE_EQ(c.sigma, 0.4);
}

TEST(ParseConfig, NamesTheOffendingField) {
  auto field_of = [](const char* text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  EXPECT_EQ(field_of(R"({"p":-1,"sigma":1,"rho":1,"num_angles":4})"), "p");
  EXPECT_EQ(field_of(R"({"p":1,"rho":1})"), "sigma");
  EXPECT_EQ(field_of(R"({"p":1,"sigma":1,"p_sigma":1})"), "p_sigma");
  EXPECT_EQ(field_of(R"({"p":1,"sigma":1,"rho":0})"), "rho");
  EXPECT_EQ(field_of(R"({"p":1,"sigma":1,"gird":8})"), "gird");
  EXPECT_EQ(field_of(R"({"p":1,"sigma":1,"num_angles":3,"angles":[0,1]})"), "angles");
  EXPECT_EQ(field_of(R"({"p":1,"sigma":1,"angles":[0,6.283185307179586]})"), "angles");
  EXPECT_EQ(field_of(R"({"p":1,"sigma":1,"shifts":[[0.1,0.1],[1.1,2.1]]})"), "shifts");
  EXPECT_EQ(field_of(R"({"p":1,"sigma":1,"num_angles":3,"shifts":[[0.1,0.1]]})"), "shifts");
  EXPECT_EQ(field_of(R"({"p":1,"sigma":1,"lattice_basis":[[1,2],[2,4]]})"), "lattice_basis");
  EXPECT_EQ(field_of(R"({"p":1,"sigma":1,"grid":0})"), "grid");
  EXPECT_EQ(field_of(R"({"p":1,"sigma":1,"seed":-3})"), "seed");
  EXPECT_EQ(field_of(R"({"p":1,"sigma":1,"rho":1,
      "test_function":{"bumps":[{"center":[0.5,0],"radius":0.6}]}})"),
            "test_function.bumps[0]");
  EXPECT_EQ(field_of(R"([1,2])"), "$");
  EXPECT_EQ(field_of(R"({"p":1,)"), "$");
}

TEST(ParseConfig, RequiredFieldsPerCommand) {
  const ExperimentConfig c = parse_config(R"({"p":1,"sigma":1})");
  EXPECT_THROW(require_rho(c), ConfigError);
  EXPECT_THROW(require_num_angles(c), ConfigError);
}

TEST(ParseConfig, DefaultCutoffWidthIsLatticeScale) {
  const ExperimentConfig c =
      parse_config(R"({"p":1,"sigma":1,"lattice_basis":[[2,0],[0,2]]})");
  EXPECT_DOUBLE_EQ(resolve_L(c), 0.5);
  EXPECT_DOUBLE_EQ(resolve_L(parse_config(R"({"p":1,"sigma":1,"L":0.3})")), 0.3);
}

TEST(ParseConfig, DrawsShiftsWhenACommandNeedsThem) {
  const ExperimentConfig c =
      parse_config(R"({"p":1,"sigma":1,"rho":1,"num_angles":3,"seed":9})");
  const SamplingSpec spec = make_sampling_spec(c, true);
  EXPECT_EQ(spec.shifts, draw_shifts(9, 0, 3));
}

ExperimentConfig full_config() {
  ExperimentConfig c;
  c.name = "round trip";
  c.description = "every field set, unicode σ included";
  c.p = 0.7;
  c.sigma = 2.0 / 7.0;
  c.rho = 1.618;
  c.num_angles = 3;
  c.angles = std::vector<double>{0.1, 2.2, 4.4};
  c.shifts = std::vector<Vec2>{Vec2(0.1, 0.3), Vec2(0.55, 0.91), Vec2(1.0 / 3.0, 0.2)};
  c.lattice_basis << 1.0, 0.25, 0.0, 1.5;
  c.grid = 17;
  c.repetitions = 3;
  c.seed = 18446744073709551615ull;
  c.output_dir = "some/dir";
  c.L = 0.9;
  c.resolution = 64;
  c.omega = Vec2(0.1, -0.3);
  c.test_function = {Bump{Vec2(0.1, 0.2), 0.5, Complex(0.3, -0.4)}};
  c.tail_tol = 1e-7;
  c.oracle_grid = 8;
  return c;
}

TEST(SerializeConfig, RoundTrips) {
  const ExperimentConfig c = full_config();
  EXPECT_EQ(parse_config(serialize_config(c)), c);
  const ExperimentConfig minimal = parse_config(R"({"p":0.5,"sigma":0.25})");
  EXPECT_EQ(parse_config(serialize_config(minimal)), minimal);
}

TEST(SerializeConfig, ShippedExperimentsRoundTrip) {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(SE2FRAME_EXPERIMENTS_DIR)) {
    if (entry.path().extension() != ".json") continue;
    const ExperimentConfig c = load_config(entry.path().string());
    EXPECT_EQ(parse_config(serialize_config(c)), c) << entry.path();
    ++count;
  }
  EXPECT_GE(count, 8);
}

TEST(ShippedExperiments, OneConfigPerFigureWithDocumentedParameters) {
  struct Expected {
    const char* file;
    double p, sigma, rho;
    int n;
  };
  const Expected all[] = {
      {"sim1.json", 0.5, 2 / M_PI, 1 / std::sqrt(2.0), 4},
      {"sim2.json", 0.5, 2 / M_PI, 1.0, 7},
      {"sim3.json", 0.5, 2 / M_PI, 1.618, 14},
      {"sim4.json", 0.7, 2.0 / 7.0, 1.618, 14},
      {"sim5.json", 0.75, 0.8 / 3.0, 2.0, 18},
      {"sim6.json", 0.8, 0.625, std::sqrt(2.0), 12},
      {"sim7.json", 1.4, 0.225, 3.0, 100},
      {"sim8.json", 1.0, 0.1, 10.0, 400},
  };
  for (const Expected& e : all) {
    const ExperimentConfig c =
        load_config((std::filesystem::path(SE2FRAME_EXPERIMENTS_DIR) / e.file).string());
    EXPECT_DOUBLE_EQ(c.p, e.p) << e.file;
    EXPECT_NEAR(c.sigma, e.sigma, 1e-15) << e.file;
    EXPECT_NEAR(*c.rho, e.rho, 1e-15) << e.file;
    EXPECT_EQ(require_num_angles(c), e.n) << e.file;
  }
}

}  // namespace
}  // namespace se2frame::cli
