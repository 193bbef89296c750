#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hikf/error.hpp"
#include "hikf/fmm.hpp"
#include "hikf/geom.hpp"
#include "hikf/kernel.hpp"

namespace hikf {

/// One violated constraint, located by dotted field path and source line (0 if unknown).
struct Diagnostic {
  std::string field;
  int line = 0;
  std::string message;

  std::string format(const std::string& file) const;
};

class ConfigError : public InputError {
 public:
  ConfigError(std::string file, std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct GridConfig {
  std::size_t nx = 59;
  std::size_t ny = 55;
  std::optional<double> dx;  // default: well separation / nx
  std::optional<double> dy;  // default: dx
  double origin_x = 0.0;
  double origin_y = 0.0;
};

struct AcquisitionConfig {
  std::size_t sources = 6;
  std::size_t receivers = 48;
  double source_x = 0.0;
  double receiver_x = 30.0;
  std::vector<Point2> source_positions;    // overrides the well layout when non-empty
  std::vector<Point2> receiver_positions;
};

struct KernelConfig {
  std::string family = "exponential";
  double variance = 1.0;
  double length_scale = 10.0;
  double power = 1.0;
  double log_amplitude = -1.0;

  KernelSpec spec() const;
};

struct PlumeConfig {
  std::size_t breakthrough_step = 16;
  double amplitude_scale = 1.0;
  std::optional<std::string> file;  // columnar "step cell value" import
};

enum class CrossCovarianceRoute { Fmm, Dense };

struct ExperimentConfig {
  GridConfig grid;
  AcquisitionConfig acquisition;
  KernelConfig kernel;
  FmmConfig fmm;
  PlumeConfig plume;
  double snr_db = 65.0;
  std::vector<std::string> filters{"kf", "hikf"};
  std::vector<std::size_t> ensemble_sizes;
  std::size_t steps = 41;
  std::uint64_t seed = 1;
  double alpha = 0.0;
  std::string output_dir = "out";
  CrossCovarianceRoute hikf_route = CrossCovarianceRoute::Fmm;
  bool spectrum_every_step = false;

  Grid2D make_grid() const;
  bool runs(const std::string& filter) const;
};

/// Parse a YAML (or JSON) experiment file. Throws ConfigError listing every problem.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Every violated constraint; empty when the file is valid. Throws InputError
/// only if the file cannot be read.
std::vector<Diagnostic> validate_config(const std::filesystem::path& path);

/// Same checks on an already-built config (line numbers are 0).
std::vector<Diagnostic> validate(const ExperimentConfig& config);

}  // namespace hikf
