#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"
#include "cwave/verify/suites.hpp"

namespace cwave::cli {

struct SampleResult {
  std::string csv;
  std::string ppm;    // empty without an image section
  double vmin = 0.0;  // finite range of the image quantity
  double vmax = 0.0;
  std::size_t singular_cells = 0;
};

/// Evaluates the grid on `threads` workers; the output does not depend on
/// the worker count.
SampleResult render_sample(const RunConfig& rc, unsigned threads);

/// Rows ray_id,t,x,y,z,xi,eta.
std::string render_trace(const RunConfig& rc);

struct VerifyResult {
  std::vector<SuiteReport> reports;
  std::string json;  // array of SuiteReport objects
  bool all_pass = false;
};

/// Throws UnknownSuite before running anything if a name is not known.
VerifyResult run_verify(const std::vector<std::string>& suites, const SamplePlan& plan);

/// Full command-line entry point; returns the process exit code.
///   0 success, 1 a suite failed, 2 unknown suite, 3 config error,
///   4 I/O error, 5 any other error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cwave::cli
