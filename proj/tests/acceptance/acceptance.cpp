// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cli/commands.hpp"
#include "cwave/congruence.hpp"
#include "cwave/energetics.hpp"
#include "cwave/errors.hpp"
#include "cwave/newman.hpp"
#include "cwave/verify/suites.hpp"

using namespace cwave;

namespace {

const cplx kI{0.0, 1.0};
const DisplacementConfig kUnit{1.0, 1.0};

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

SamplePlan plan_with(int n, double d = 0.3) {
  SamplePlan p;
  p.n = n;
  p.pulse_d = d;
  return p;
}

Outcome suites_below(const std::vector<std::string>& names, const SamplePlan& plan) {
  Outcome o;
  for (const auto& name : names) {
    const auto rep = run_suite(name, plan);
    o.ok = o.ok && rep.pass;
    o.detail += name + " max=" + fmt(rep.max_residual) + " ";
  }
  return o;
}

// 1. zeta^2, the (rho, z) <-> (xi, eta) pair and the frame Gram matrix.
Outcome geometry_identities() {
  double worst_z2 = 0, worst_pair = 0, worst_gram = 0;
  const auto plan = plan_with(10000);
  for (int i = 0; i < plan.n; ++i) {
    const Point3 x = sample_point(plan, i).x;
    const auto cd = complex_distance(x, kUnit);
    const double r2 = dot(x, x);
    const cplx z2 = r2 - 1.0 - 2.0 * kI * x.z;
    worst_z2 = std::max(worst_z2, std::abs(cd.zeta * cd.zeta - z2) / std::abs(z2));
    const double lhs = cd.rho * cd.rho;
    const double rhs = (1.0 + cd.xi * cd.xi) * (1.0 - cd.eta * cd.eta);
    worst_pair = std::max(worst_pair, std::abs(lhs - rhs) / lhs);
    worst_pair = std::max(worst_pair, std::abs(x.z - cd.xi * cd.eta) / std::sqrt(r2));
    const auto fr = frame_triad(cd, kUnit);
    const CVec3 u[3] = {fr.zeta_hat, fr.theta_hat, to_complex(fr.phi_hat)};
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) {
        worst_gram = std::max(worst_gram, std::abs(dot(u[k], u[l]) - (k == l ? 1.0 : 0.0)));
      }
    }
  }
  const double worst = std::max({worst_z2, worst_pair, worst_gram});
  return {worst <= 1e-12, "zeta2=" + fmt(worst_z2) + " pair=" + fmt(worst_pair) + " gram=" + fmt(worst_gram)};
}

// 3. Twenty random gauge triples, 100 points each.
Outcome w_constraints() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto draw = [&] {
    const double re = u(rng);
    return cplx(re, u(rng));
  };
  double worst = 0;
  bool ok = true;
  for (int k = 0; k < 20; ++k) {
    auto plan = plan_with(100);
    plan.seed = 1000 + k;
    plan.gauge = GaugeParams{draw(), draw(), draw()};
    const auto rep = run_suite("w_constraints", plan);
    ok = ok && rep.pass;
    worst = std::max(worst, rep.max_residual);
  }
  return {ok, "max=" + fmt(worst) + " over 20 gauges x 100 points"};
}

Outcome wave_and_gauge() {
  Outcome o;
  for (double d : {0.1, 0.3, 1.0}) {
    const auto r = suites_below({"lorenz", "scalar_wave", "current_free"}, plan_with(1000, d));
    o.ok = o.ok && r.ok;
    o.detail += "d=" + fmt(d) + ": " + r.detail;
  }
  return o;
}

// 7. Kerr form, energy velocity of the null fields, and its time independence.
Outcome congruence_equality() {
  auto o = suites_below({"congruence_match"}, plan_with(10000));
  const WaveletParams wp{kUnit, PulseSpec::gaussian(0.3)};
  const auto plan = plan_with(10000);
  double worst_v = 0, worst_t = 0;
  for (int i = 0; i < plan.n; ++i) {
    const auto p = sample_point(plan, i);
    const Helicity h = p.helicity;
    const Vec3 u = ray_velocity(p.x, kUnit, h);
    const double xi = complex_distance(p.x, kUnit).xi;
    Vec3 v0;
    for (int k = 0; k < 5; ++k) {
      const double t = (k == 0) ? p.t : xi + 0.3 * (k - 2.5);
      const auto rf = real_fields(coherent_wavelet(p.x, t, wp, h), h);
      const Vec3 v = densities(rf.E, rf.B).v;
      worst_v = std::max(worst_v, norm(v - u));
      if (k == 0) v0 = v;
      worst_t = std::max(worst_t, norm(v - v0));
      if (i >= 1000) break;  // time scan on the first 10^3 points
    }
  }
  o.ok = o.ok && worst_v <= 1e-10 && worst_t <= 1e-10;
  o.detail += "|v-u|=" + fmt(worst_v) + " dv(t)=" + fmt(worst_t);
  return o;
}

// 8. Complex velocity is null; twist does not vanish off the axis. The
// absolute check uses 10^3 points; the 10^4 sweep is normalised by |v|^2,
// the rounding floor of v.v when the opposite q is small and |v| is large.
Outcome complex_congruence() {
  const auto plan = plan_with(10000);
  const WaveletParams wp{kUnit, PulseSpec::gaussian(plan.pulse_d)};
  double worst_abs = 0, worst_scaled = 0, min_twist = 1e300;
  int nodes = 0, checked = 0;
  for (int i = 0; i < plan.n; ++i) {
    const auto p = sample_point(plan, i);
    const auto gp = GaugeParams::null_gauge(p.helicity, p.gp.kappa, p.gp.mu);
    try {
      const auto cv = complex_velocity(p.x, p.t, wp, gp, p.helicity);
      for (const CVec3& v : {cv.v, cv.v_ratio}) {
        const double err = std::abs(sq(v) - 1.0);
        if (i < 1000) worst_abs = std::max(worst_abs, err);
        worst_scaled = std::max(worst_scaled, err / std::max(1.0, std::pow(norm(v), 2)));
      }
      if (std::hypot(p.x.x, p.x.y) > 1e-3) {
        min_twist = std::min(min_twist, std::abs(cv.twist));
        ++checked;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PulseNode) throw;
      ++nodes;
    }
  }
  return {worst_abs <= 1e-10 && worst_scaled <= 1e-10 && min_twist > 1e-6 && checked > 0,
          "|v.v-1|=" + fmt(worst_abs) + " (10^3 pts) " + fmt(worst_scaled) + " (10^4 pts, /|v|^2) min|twist|=" +
              fmt(min_twist) + " pulse nodes=" + std::to_string(nodes)};
}

Outcome newman_statics() {
  double mismatch = 0;
  for (int k = 0; k <= 99; ++k) {
    const double rho = 0.01 * k;
    mismatch = std::max(mismatch, boundary_values(rho, kUnit).max_relative_mismatch);
  }
  // Omega(a) as the limit onto the rim from just above it.
  const double om0 = newman_energetics({0, 0, 0}, kUnit, Side::Upper).omega;
  const double oma = newman_energetics({1.0, 0, 1e-6}, kUnit).omega;
  const double ratio_err = std::abs(om0 / oma - 2.0) / 2.0;
  const auto r20 = multipole_check(20.0, kUnit);
  const auto r40 = multipole_check(40.0, kUnit);
  const auto r50 = multipole_check(50.0, kUnit);
  const double decay = r20.max_residual / r40.max_residual;
  const double flux_err = std::abs(r50.flux_over_4pi - 1.0);
  const bool ok = mismatch <= 1e-8 && ratio_err <= 1e-10 && flux_err <= 1e-6 && std::abs(decay / 16.0 - 1.0) <= 0.1;
  return {ok, "sigma/K mismatch=" + fmt(mismatch) + " Omega ratio err=" + fmt(ratio_err) +
                  " flux err=" + fmt(flux_err) + " r20/r40=" + fmt(decay)};
}

Outcome pure_gauge() {
  const auto plan = plan_with(2000);
  const WaveletParams wp{kUnit, PulseSpec::gaussian(plan.pulse_d)};
  double worst_f = 0, worst_shift = 0, min_a = 1e300, min_change = 1e300;
  for (int i = 0; i < plan.n; ++i) {
    const auto p = sample_point(plan, i);
    const auto r = pure_gauge_field(p.x, p.t, wp, p.helicity, p.gp.mu);
    worst_f = std::max(worst_f, r.f_residual);
    min_a = std::min(min_a, norm(r.A_tilde));

    // Adding potentials: Psi (w_gp + w_pg) = 2 Psi w_mid with mid = (gp + pg)/2,
    // because w carries zeta_hat with unit weight for every gauge.
    const auto pg = GaugeParams::pure_gauge(p.helicity, p.gp.mu);
    const GaugeParams mid{0.5 * (p.gp.kappa + pg.kappa), 0.5 * (p.gp.lambda + pg.lambda),
                          0.5 * (p.gp.mu + pg.mu)};
    const auto base = field_sample(p.x, p.t, wp, p.gp);
    const auto sum = field_sample(p.x, p.t, wp, mid);
    const CVec3 F = 2.0 * sum.F(p.helicity);
    worst_shift = std::max(worst_shift, norm(F - base.F(p.helicity)) / norm(base.F(p.helicity)));
    // The opposite helicity does change.
    min_change = std::min(min_change, norm(2.0 * sum.F(opposite(p.helicity)) - base.F(opposite(p.helicity))) /
                                          norm(base.F(opposite(p.helicity))));
  }
  return {worst_f <= 1e-12 && worst_shift <= 1e-12 && min_a > 0.0,
          "|F|/scale=" + fmt(worst_f) + " shift=" + fmt(worst_shift) + " min|A|=" + fmt(min_a) +
              " opposite change>=" + fmt(min_change)};
}

Outcome pulse_module() {
  double worst = 0, worst_real = 0;
  for (double d : {0.1, 0.3, 1.0}) {
    const auto p = PulseSpec::gaussian(d);
    for (double r : {0.0, 0.5, 2.0, 5.0, 10.0}) {
      for (int k = 0; k < 12; ++k) {
        const cplx tau = d * std::polar(r, -kPi * k / 11.0);
        for (int order = 0; order <= 2; ++order) {
          const cplx fast = analytic_signal(p, tau, order);
          const cplx slow = quadrature_oracle(p, tau, order);
          worst = std::max(worst, std::abs(fast - slow) / std::abs(slow));
        }
      }
    }
    const double peak = real_pulse(p, 0.0);
    for (int k = -100; k <= 100; ++k) {
      const double t = 0.1 * k * d;
      worst_real = std::max(worst_real, std::abs(2.0 * analytic_signal(p, t).real() - real_pulse(p, t)) / peak);
    }
  }
  return {worst <= 1e-8 && worst_real <= 1e-10, "fast vs oracle=" + fmt(worst) + " 2Re g-g0=" + fmt(worst_real)};
}

std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cwavelet");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  if (cli::run(static_cast<int>(argv.size()), argv.data(), out, err) != 0) {
    throw Error(ErrorCode::DomainError, "cli run failed: " + err.str());
  }
  return out.str();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_determinism() {
  const auto v1 = run_cli({"verify", "--all", "--seed", "42", "--threads", "1"});
  const auto v2 = run_cli({"verify", "--all", "--seed", "42", "--threads", "1"});
  const auto v8 = run_cli({"verify", "--all", "--seed", "42", "--threads", "8"});

  const auto dir = std::filesystem::temp_directory_path() / "cwave_acceptance";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "config.json") << R"({
    "a": 1, "s": 1, "pulse": {"type": "gaussian", "d": 0.3},
    "gauge": {"kappa": 0.2, "lambda": [0, -1], "mu": [0, 0.1]}, "time": 3,
    "grid": {"plane": "xz", "extent": [-5, 5, -5, 5], "nx": 96, "ny": 96},
    "quantities": ["psi", "F", "inertia", "twist"], "image": {"quantity": "abs_psi"}})";
  const std::string cfg = (dir / "config.json").string();
  bool same = true;
  std::string first_csv, first_ppm;
  for (const char* threads : {"1", "1", "8"}) {
    const auto out = dir / (std::string("out") + threads);
    std::filesystem::remove_all(out);
    run_cli({"sample", "--config", cfg, "--out", out.string(), "--threads", threads});
    const auto csv = slurp(out / "sample.csv");
    const auto ppm = slurp(out / "sample.ppm");
    if (first_csv.empty()) {
      first_csv = csv;
      first_ppm = ppm;
    }
    same = same && csv == first_csv && ppm == first_ppm;
  }
  std::filesystem::remove_all(dir);
  const bool ok = v1 == v2 && v1 == v8 && same && !first_csv.empty();
  return {ok, std::string("verify ") + (v1 == v2 && v1 == v8 ? "identical" : "DIFFERENT") + ", sample " +
                  (same ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "geometry identities", 1.0, geometry_identities},
      {2, "frame identities and derivative-free frame", 30.0,
       [] { return suites_below({"frame_identities", "theorem2"}, plan_with(1000)); }},
      {3, "w constraints for random gauges", 60.0, w_constraints},
      {4, "Lorenz gauge and wave equations", 120.0, wave_and_gauge},
      {5, "complex Maxwell closure", 120.0, [] { return suites_below({"maxwell_complex"}, plan_with(1000)); }},
      {6, "nullity", 10.0, [] { return suites_below({"nullity"}, plan_with(10000)); }},
      {7, "congruence equality", 10.0, congruence_equality},
      {8, "complex congruence", 10.0, complex_congruence},
      {9, "Newman statics", 60.0, newman_statics},
      {10, "pure gauge", 10.0, pure_gauge},
      {11, "pulse module", 10.0, pulse_module},
      {12, "CLI determinism", 300.0, cli_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && secs <= c.budget_s;
    if (!pass) ++failures;
    std::printf("%s %2d %s: %s (%.2fs of %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
