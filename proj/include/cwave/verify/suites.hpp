#pragma once

// Residual suites: each draws sample points from the exterior shell and
// checks one family of identities there with the FD oracles (or, for the
// algebraic suites, directly).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cwave/fields.hpp"
#include "cwave/verify/fd.hpp"

namespace cwave {

struct SamplePlan {
  std::uint64_t seed = 42;
  int n = 1000;
  DisplacementConfig cfg{1.0, 1.0};
  double pulse_d = 0.3;               // Gaussian duration
  std::optional<GaugeParams> gauge;   // drawn per point when empty
  unsigned threads = 1;
  std::optional<FdConfig> fd;         // FdConfig::for_length(a) when empty
};

struct SamplePoint {
  Point3 x;
  double t = 0;
  GaugeParams gp;
  Helicity helicity = Helicity::Plus;
};

/// Point i of the plan. Each index has its own generator seeded from
/// (seed, i), so a point never depends on how the work is scheduled.
///   xi in [0.2a, 5a], |eta| <= 0.95a, phi uniform, rho >= 0.01a,
///   t = xi + d U(-2, 2), gauge components with re, im in U(-1, 1).
SamplePoint sample_point(const SamplePlan& plan, std::size_t index);

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int n = 0;
  double tol = 0;
  double max_residual = 0;
  double median_residual = 0;
  bool pass = false;
  Point3 worst_point;
  double worst_t = 0;
  std::vector<double> residuals;  // per point, in sample order
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Tolerance applied by the named suite.
double suite_tolerance(const std::string& name);

/// Throws UnknownSuite for names not in suite_names().
SuiteReport run_suite(const std::string& name, const SamplePlan& plan);

/// {suite, seed, n, tol, max_residual, median_residual, pass, worst_point}
nlohmann::json to_json(const SuiteReport& rep);

// Per-point residuals, exposed for targeted tests.
double residual_scalar_wave(const SamplePoint& p, const WaveletParams& wp, const FdConfig& fc);
double residual_lorenz(const SamplePoint& p, const WaveletParams& wp, const FdConfig& fc);
double residual_current_free(const SamplePoint& p, const WaveletParams& wp, const FdConfig& fc);
double residual_maxwell_complex(const SamplePoint& p, const WaveletParams& wp, const FdConfig& fc);
double residual_w_constraints(const SamplePoint& p, const WaveletParams& wp, const FdConfig& fc);
double residual_nullity(const SamplePoint& p, const WaveletParams& wp);
double residual_congruence_match(const SamplePoint& p, const DisplacementConfig& cfg);

/// The fifteen gradient/curl/divergence/Laplacian identities of the frame,
/// in the order zeta, zeta_hat, theta, theta_hat, phi, phi_hat.
struct FrameIdentityResiduals {
  std::vector<std::string> names;
  std::vector<double> values;
  double max() const;
};
FrameIdentityResiduals frame_identity_residuals(const Point3& x, const DisplacementConfig& cfg,
                                                const FdConfig& fc);

/// D_zeta applied to theta, zeta_hat, theta_hat and phi_hat.
FrameIdentityResiduals theorem2_residuals(const Point3& x, const DisplacementConfig& cfg,
                                          const FdConfig& fc);

}  // namespace cwave
