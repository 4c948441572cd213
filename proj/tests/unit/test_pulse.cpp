#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "cwave/errors.hpp"
#include "cwave/faddeeva.hpp"
#include "cwave/pulse.hpp"
#include "cwave/quadrature.hpp"
#include "helpers.hpp"

using namespace cwave;
using testutil::rel_err;

// Reference values computed with mpmath at 40 digits (tests/oracles/generate.py).
TEST_CASE("Faddeeva function against high-precision references") {
  struct Case {
    cplx z, w;
  };
  const Case cases[] = {
      {{0.5, 0.5}, {0.53315670791217491, 0.23048823138445841}},
      {{2.0, 1.0}, {0.14023958136627794, 0.2222134401798991}},
      {{-1.5, 0.2}, {0.1565205841887955, -0.42107594736198073}},
      {{0.1, -0.3}, {1.4333382060907128, 0.19832682648544911}},
      {{6.0, 0.01}, {0.00016375289889683184, 0.095395923386601482}},
      {{3.0, -2.0}, {-0.08133907992862736, 0.12108616246299845}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.z);
    CHECK(rel_err(faddeeva_w(c.z), c.w) < 1e-13);
  }
  CHECK(std::abs(faddeeva_w(0.0) - 1.0) < 1e-15);
}

TEST_CASE("Faddeeva symmetries and overflow") {
  for (cplx z : {cplx(0.3, 0.8), cplx(-2.2, 1.7), cplx(4.0, 0.2)}) {
    CHECK(rel_err(faddeeva_w(-std::conj(z)), std::conj(faddeeva_w(z))) < 1e-13);
  }
  CHECK_THROWS_AS(faddeeva_w({0.0, -40.0}), Error);
  CHECK_THROWS_AS(faddeeva_w({std::nan(""), 0.0}), Error);
}

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
  const auto rule = gauss_legendre(8);
  double sum_w = 0.0, m14 = 0.0, m15 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum_w += rule.weights[i];
    m14 += rule.weights[i] * std::pow(rule.nodes[i], 14);
    m15 += rule.weights[i] * std::pow(rule.nodes[i], 15);
  }
  CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(m14 == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
  CHECK(std::abs(m15) < 1e-15);
  CHECK_THROWS_AS(gauss_legendre(0), Error);
}

TEST_CASE("Gaussian analytic signal against references") {
  const auto p1 = PulseSpec::gaussian(1.0);
  CHECK(rel_err(analytic_signal(p1, 0.0), 0.28209479177387814) < 1e-14);
  CHECK(rel_err(analytic_signal(p1, {0.0, -5.0}), 0.031229201729712607) < 1e-13);

  const auto p = PulseSpec::gaussian(0.5);
  CHECK(rel_err(analytic_signal(p, {0.3, -0.7}, 1),
                {-0.10300092740152673, -0.16006154089145677}) < 1e-13);
  CHECK(rel_err(analytic_signal(p, {-1.2, -0.4}, 2),
                {0.20826730683096976, 0.027894505772998941}) < 1e-13);

  const auto jet = analytic_signal_jet(p, {0.3, -0.7});
  CHECK(jet.g == analytic_signal(p, {0.3, -0.7}, 0));
  CHECK(jet.g1 == analytic_signal(p, {0.3, -0.7}, 1));
  CHECK(jet.g2 == analytic_signal(p, {0.3, -0.7}, 2));
  CHECK_THROWS_AS(analytic_signal(p, 0.0, 3), Error);
}

TEST_CASE("closed form agrees with the quadrature oracle") {
  for (double d : {0.1, 0.3, 1.0, 2.0}) {
    const auto p = PulseSpec::gaussian(d);
    for (cplx tau : {cplx(0.0, -1.0), cplx(0.7, -0.3), cplx(-2.0, -0.05), cplx(5.0, -1.0)}) {
      for (int order = 0; order <= 2; ++order) {
        CAPTURE(d);
        CAPTURE(tau);
        CAPTURE(order);
        const cplx fast = analytic_signal(p, tau, order);
        const cplx slow = quadrature_oracle(p, tau, order);
        CHECK(std::abs(fast - slow) <= 1e-10 * std::max(std::abs(slow), 1e-3 * std::abs(analytic_signal(p, 0.0, order))));
      }
    }
  }
}

TEST_CASE("real pulse is twice the real part of the signal") {
  const auto p = PulseSpec::gaussian(0.4);
  for (double t : {-1.0, -0.2, 0.0, 0.3, 0.9}) {
    const double want = std::exp(-t * t / 0.16) / (std::sqrt(kPi) * 0.4);
    CHECK(real_pulse(p, t) == doctest::Approx(want).epsilon(1e-13));
    CHECK(2.0 * analytic_signal(p, t).real() == doctest::Approx(want).epsilon(1e-13));
  }
  CHECK(p.peak_derivative() == doctest::Approx(1.0 / (kPi * 0.16)));
}

namespace {
PulseSpec tabulated_gaussian(double d, double omega_max, int n) {
  std::vector<double> w(n);
  std::vector<cplx> g(n);
  for (int i = 0; i < n; ++i) {
    w[i] = omega_max * i / (n - 1);
    g[i] = std::exp(-w[i] * w[i] * d * d / 4.0);
  }
  return PulseSpec::tabulated(w, g);
}
}  // namespace

TEST_CASE("tabulated spectrum reproduces the Gaussian") {
  const auto tab = tabulated_gaussian(1.0, 20.0, 4001);
  const auto gauss = PulseSpec::gaussian(1.0);
  for (cplx tau : {cplx(0.0, -0.5), cplx(1.0, -1.0), cplx(-0.7, -2.0), cplx(0.2, 0.0)}) {
    for (int order = 0; order <= 2; ++order) {
      const cplx want = analytic_signal(gauss, tau, order);
      CHECK(std::abs(analytic_signal(tab, tau, order) - want) <= 1e-6 * std::abs(want));
    }
  }
  CHECK(tab.spectrum(1.0).real() == doctest::Approx(std::exp(-0.25)).epsilon(1e-6));
  CHECK(tab.spectrum(25.0) == cplx(0.0));
  CHECK(tab.quadrature_error_estimate() < 1e-8);
}

TEST_CASE("tabulated spectrum validation") {
  CHECK_THROWS_AS(PulseSpec::tabulated({0.0, 1.0, 0.5}, {1.0, 1.0, 1.0}), Error);
  CHECK_THROWS_AS(PulseSpec::tabulated({0.0, 1.0}, {1.0}), Error);
  CHECK_THROWS_AS(PulseSpec::tabulated({-1.0, 0.0, 1.0}, {1.0, 1.0, 1.0}), Error);
  // Too coarse to resolve a narrow pulse: the halving check rejects it.
  CHECK_THROWS_AS(tabulated_gaussian(0.05, 200.0, 9), Error);

  const auto tab = tabulated_gaussian(1.0, 20.0, 2001);
  try {
    analytic_signal(tab, {0.0, 0.5});
    FAIL("expected Divergent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Divergent);
  }
}

TEST_CASE("spectrum loaded from CSV") {
  const auto path = std::filesystem::temp_directory_path() / "cwave_test_spectrum.csv";
  {
    std::ofstream out(path);
    out.precision(17);
    out << "omega,re_ghat,im_ghat\n";
    for (int i = 0; i <= 2000; ++i) {
      const double w = 0.01 * i;
      out << w << "," << std::exp(-w * w / 4.0) << ",0\n";
    }
  }
  const auto tab = PulseSpec::load_csv(path.string());
  const auto gauss = PulseSpec::gaussian(1.0);
  const cplx tau(0.4, -1.0);
  CHECK(std::abs(analytic_signal(tab, tau) - analytic_signal(gauss, tau)) <
        1e-6 * std::abs(analytic_signal(gauss, tau)));
  std::filesystem::remove(path);

  try {
    PulseSpec::load_csv("/nonexistent/spectrum.csv");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}
