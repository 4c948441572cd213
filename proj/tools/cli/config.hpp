#pragma once

// JSON run configuration for the command-line tool. See docs/config-schema.md.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cwave/potential.hpp"

namespace cwave::cli {

enum class Plane { XZ, XY, YZ };

struct GridSpec {
  Plane plane = Plane::XZ;
  double offset = 0.0;                       // coordinate normal to the plane
  double extent[4] = {-3.0, 3.0, -3.0, 3.0}; // hmin, hmax, vmin, vmax
  int nx = 64;
  int ny = 64;
};

struct ImageSpec {
  std::string quantity = "abs_psi";  // abs_psi | abs_f | inertia | abs_twist | u
  bool log_scale = false;
};

struct TraceSpec {
  std::vector<double> rho0 = {0.0, 0.6, 1.0};  // units of a
  int rays_per_ring = 16;
  std::vector<int> z_signs = {1};
  double t_max = 10.0;
  int nt = 101;
};

struct VerifySpec {
  std::vector<std::string> suites;
  int n = 1000;
  std::uint64_t seed = 42;
  double pulse_d = 0.3;
};

struct RunConfig {
  DisplacementConfig cfg{1.0, 1.0};
  Vec3 axis{0.0, 0.0, 1.0};
  WaveletParams wavelet;
  GaugeParams gauge;
  Helicity helicity = Helicity::Plus;
  double time = 0.0;
  GridSpec grid;
  std::vector<std::string> quantities = {"psi"};
  std::optional<ImageSpec> image;
  TraceSpec trace;
  VerifySpec verify;
  std::string csv_name = "sample.csv";
  std::string ppm_name = "sample.ppm";
  std::string trace_name = "trace.csv";
  std::string verify_name = "verify.json";
};

/// Known names for the "quantities" list.
const std::vector<std::string>& quantity_names();

/// Throws ConfigError on schema violations. Relative paths (tabulated pulse
/// CSV) are resolved against base_dir.
RunConfig parse_config(const nlohmann::json& j, const std::string& base_dir = ".");

/// Throws IoError if the file cannot be read, ConfigError if it is invalid.
RunConfig load_config(const std::string& path);

}  // namespace cwave::cli
