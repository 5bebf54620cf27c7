#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "se2frame/error.hpp"
#include "se2frame/oracle.hpp"
#include "se2frame/sampling.hpp"
#include "se2frame/types.hpp"

namespace se2frame::cli {

class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error("config error at '" + field + "': " + what), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ExperimentConfig {
  std::string name;
  std::string description;

  double p = 0.0;
  double sigma = 0.0;
  std::optional<double> rho;
  std::optional<int> num_angles;
  std::optional<std::vector<double>> angles;
  std::optional<std::vector<Vec2>> shifts;
  Mat2 lattice_basis = Mat2::Identity();

  int grid = 256;
  int repetitions = 20;
  std::uint64_t seed = 0;
  std::string output_dir = "se2frame_out";

  // covering
  std::optional<double> L;  // defaults to 1/sqrt(covolume of the lattice)
  int resolution = 512;

  // gramian
  std::optional<Vec2> omega;

  // oracle
  std::vector<Bump> test_function;
  double tail_tol = 1e-8;
  int oracle_grid = 16;

  friend bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);
};

// Parses and validates a JSON document. σ may be given as "sigma" or through
// the shape factor "p_sigma" (σ = p_sigma / p). Unknown keys are rejected.
// Throws ConfigError naming the offending field.
ExperimentConfig parse_config(std::string_view json_text);

ExperimentConfig load_config(const std::string& path);

// JSON text that parse_config maps back to an equal config.
std::string serialize_config(const ExperimentConfig& cfg);

// Fields required by the sampling commands; throws ConfigError when absent.
double require_rho(const ExperimentConfig& cfg);
int require_num_angles(const ExperimentConfig& cfg);
std::vector<double> resolve_angles(const ExperimentConfig& cfg);
double resolve_L(const ExperimentConfig& cfg);

// Shifts omitted from the config stay empty (the sweep draws them per
// repetition) unless `need_shifts`, in which case repetition 0 of the seeded
// draw is used.
SamplingSpec make_sampling_spec(const ExperimentConfig& cfg, bool need_shifts = false);

}  // namespace se2frame::cli
