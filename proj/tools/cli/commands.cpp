#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cwave/congruence.hpp"
#include "cwave/energetics.hpp"
#include "cwave/errors.hpp"
#include "cwave/parallel.hpp"

namespace cwave::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void append_number(std::string& s, double v) {
  if (std::isnan(v)) {
    s += "nan";
    return;
  }
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  s.append(buf, res.ptr);
}

std::vector<std::string> header_for(const RunConfig& rc) {
  std::vector<std::string> cols = {"x", "y", "z", "t"};
  for (const auto& q : rc.quantities) {
    if (q == "psi" || q == "twist") {
      cols.push_back("re_" + q);
      cols.push_back("im_" + q);
    } else if (q == "E" || q == "B" || q == "F" || q == "coherent") {
      for (const char* c : {"x", "y", "z"}) {
        cols.push_back("re_" + q + "_" + c);
        cols.push_back("im_" + q + "_" + c);
      }
    } else {
      cols.push_back(q);  // real scalars: u, inertia
    }
  }
  if (rc.image) cols.push_back(rc.image->quantity);
  cols.push_back("singular");
  return cols;
}

Point3 grid_point(const GridSpec& g, int i, int j) {
  const double dh = (g.extent[1] - g.extent[0]) / g.nx;
  const double dv = (g.extent[3] - g.extent[2]) / g.ny;
  const double h = g.extent[0] + (i + 0.5) * dh;
  const double v = g.extent[3] - (j + 0.5) * dv;  // top row first
  switch (g.plane) {
    case Plane::XY: return {h, v, g.offset};
    case Plane::YZ: return {g.offset, h, v};
    case Plane::XZ: break;
  }
  return {h, g.offset, v};
}

// Values for one cell, in header order (excluding x, y, z, t, singular).
struct CellValues {
  std::vector<double> values;
  double image = kNaN;
  bool singular = false;
};

CellValues evaluate_cell(const RunConfig& rc, const AxisAlignment& align, const Point3& world,
                         std::size_t n_values) {
  CellValues cv;
  cv.values.assign(n_values, kNaN);
  try {
    const Point3 x = align.to_canonical(world);
    const double t = rc.time;
    const auto& wp = rc.wavelet;
    const bool need_fields = std::any_of(rc.quantities.begin(), rc.quantities.end(), [](const auto& q) {
      return q == "E" || q == "B" || q == "F" || q == "u" || q == "inertia";
    }) || (rc.image && (rc.image->quantity != "abs_psi" && rc.image->quantity != "abs_twist"));

    FieldSample fs;
    if (need_fields) fs = field_sample(x, t, wp, rc.gauge);
    std::optional<DensitySample> dens;
    auto densities_at = [&]() -> const DensitySample& {
      if (!dens) {
        const auto rf = real_fields(fs, rc.helicity);
        dens = densities(rf.E, rf.B);
      }
      return *dens;
    };
    std::optional<ComplexVelocity> cvel;
    auto twist_at = [&]() -> cplx {
      if (!cvel) cvel = complex_velocity(x, t, wp, rc.gauge, rc.helicity);
      return cvel->twist;
    };

    std::size_t k = 0;
    auto put_c = [&](cplx v) {
      cv.values[k++] = v.real();
      cv.values[k++] = v.imag();
    };
    auto put_v = [&](const CVec3& v) {
      const CVec3 w = align.from_canonical(v);
      put_c(w.x);
      put_c(w.y);
      put_c(w.z);
    };
    for (const auto& q : rc.quantities) {
      if (q == "psi") put_c(psi(x, t, wp));
      else if (q == "twist") put_c(twist_at());
      else if (q == "E") put_v(fs.E_tilde);
      else if (q == "B") put_v(fs.B_tilde);
      else if (q == "F") put_v(fs.F(rc.helicity));
      else if (q == "coherent") put_v(coherent_wavelet(x, t, wp, rc.helicity));
      else if (q == "u") cv.values[k++] = densities_at().u;
      else if (q == "inertia") cv.values[k++] = densities_at().inertia;
    }
    if (rc.image) {
      const auto& iq = rc.image->quantity;
      if (iq == "abs_psi") cv.image = std::abs(psi(x, t, wp));
      else if (iq == "abs_f") cv.image = norm(fs.F(rc.helicity));
      else if (iq == "inertia") cv.image = densities_at().inertia;
      else if (iq == "u") cv.image = densities_at().u;
      else cv.image = std::abs(twist_at());
      cv.values[k++] = cv.image;
    }
    for (double v : cv.values) {
      if (!std::isfinite(v)) throw Error(ErrorCode::Divergent, "non-finite value");
    }
  } catch (const Error&) {
    cv.values.assign(n_values, kNaN);
    cv.image = kNaN;
    cv.singular = true;
  }
  return cv;
}

std::string make_ppm(const std::vector<double>& img, int nx, int ny, bool log_scale, double& vmin,
                     double& vmax) {
  std::vector<double> v(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    const double x = img[i];
    v[i] = !std::isfinite(x) ? kNaN : (log_scale ? (x > 0.0 ? std::log10(x) : kNaN) : x);
  }
  vmin = std::numeric_limits<double>::infinity();
  vmax = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (std::isfinite(img[i])) {
      vmin = std::min(vmin, img[i]);
      vmax = std::max(vmax, img[i]);
    }
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double x : v) {
    if (std::isfinite(x)) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  std::string out = "P6\n" + std::to_string(nx) + " " + std::to_string(ny) + "\n255\n";
  out.reserve(out.size() + 3 * img.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (!std::isfinite(img[i])) {  // singular cell sentinel
      out.push_back(static_cast<char>(255));
      out.push_back(0);
      out.push_back(0);
      continue;
    }
    double level = 0.0;  // non-positive values under log scaling map to black
    if (std::isfinite(v[i]) && hi > lo) level = (v[i] - lo) / (hi - lo);
    const auto g = static_cast<unsigned char>(std::lround(255.0 * std::clamp(level, 0.0, 1.0)));
    out.push_back(static_cast<char>(g));
    out.push_back(static_cast<char>(g));
    out.push_back(static_cast<char>(g));
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  f << content;
  if (!f) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::filesystem::path prepare_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create output directory " + dir);
  return dir;
}

}  // namespace

SampleResult render_sample(const RunConfig& rc, unsigned threads) {
  const AxisAlignment align(rc.axis);
  const auto header = header_for(rc);
  const std::size_t n_values = header.size() - 5;  // minus x,y,z,t,singular
  const int nx = rc.grid.nx;
  const int ny = rc.grid.ny;
  const auto cells = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);

  std::vector<CellValues> grid(cells);
  parallel_for(cells, threads, [&](std::size_t idx) {
    const int i = static_cast<int>(idx % nx);
    const int j = static_cast<int>(idx / nx);
    grid[idx] = evaluate_cell(rc, align, grid_point(rc.grid, i, j), n_values);
  });

  SampleResult res;
  std::string& csv = res.csv;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c) csv += ',';
    csv += header[c];
  }
  csv += "\r\n";
  std::vector<double> img(cells, kNaN);
  for (std::size_t idx = 0; idx < cells; ++idx) {
    const int i = static_cast<int>(idx % nx);
    const int j = static_cast<int>(idx / nx);
    const Point3 p = grid_point(rc.grid, i, j);
    for (double v : {p.x, p.y, p.z, rc.time}) {
      append_number(csv, v);
      csv += ',';
    }
    for (double v : grid[idx].values) {
      append_number(csv, v);
      csv += ',';
    }
    csv += grid[idx].singular ? "1\r\n" : "0\r\n";
    img[idx] = grid[idx].image;
    if (grid[idx].singular) ++res.singular_cells;
  }
  if (rc.image) res.ppm = make_ppm(img, nx, ny, rc.image->log_scale, res.vmin, res.vmax);
  return res;
}

std::string render_trace(const RunConfig& rc) {
  const AxisAlignment align(rc.axis);
  const double a = rc.cfg.a;
  std::string csv = "ray_id,t,x,y,z,xi,eta\r\n";
  int ray_id = 0;
  for (double rho_rel : rc.trace.rho0) {
    const double rho0 = rho_rel * a;
    const int count = rho0 == 0.0 ? 1 : rc.trace.rays_per_ring;
    for (int zs : rc.trace.z_signs) {
      for (int k = 0; k < count; ++k) {
        const double phi0 = 2.0 * kPi * k / count;
        const Point3 origin{rho0 * std::cos(phi0), rho0 * std::sin(phi0), 0.0};
        const Ray ray = make_ray(origin, rc.cfg, rc.helicity, zs);
        for (int it = 0; it < rc.trace.nt; ++it) {
          const double t = rc.trace.nt == 1 ? 0.0 : rc.trace.t_max * it / (rc.trace.nt - 1);
          const Point3 x = trace_ray(ray, t);
          double xi = kNaN, eta = kNaN;
          try {
            const auto sph = to_spheroidal(x, rc.cfg, zs > 0 ? Side::Upper : Side::Lower);
            xi = sph.xi;
            eta = sph.eta;
          } catch (const Error&) {
            // the focal circle: left as NaN
          }
          const Point3 w = align.from_canonical(x);
          csv += std::to_string(ray_id);
          for (double v : {t, w.x, w.y, w.z, xi, eta}) {
            csv += ',';
            append_number(csv, v);
          }
          csv += "\r\n";
        }
        ++ray_id;
      }
    }
  }
  return csv;
}

VerifyResult run_verify(const std::vector<std::string>& suites, const SamplePlan& plan) {
  for (const auto& s : suites) {
    if (!is_suite(s)) throw Error(ErrorCode::UnknownSuite, "no suite named '" + s + "'");
  }
  VerifyResult vr;
  vr.all_pass = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : suites) {
    vr.reports.push_back(run_suite(s, plan));
    vr.all_pass = vr.all_pass && vr.reports.back().pass;
    arr.push_back(to_json(vr.reports.back()));
  }
  vr.json = arr.dump(2) + "\n";
  return vr;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pulsed-beam wavelet evaluator and identity checker"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  unsigned threads = 0;
  std::uint64_t seed = 42;
  int n = 0;
  bool all = false;
  std::vector<std::string> suites;

  auto add_common = [&](CLI::App* sub, bool config_required) {
    auto* opt = sub->add_option("--config", config_path, "JSON run configuration");
    if (config_required) opt->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--threads", threads, "worker threads (0 = hardware parallelism)");
    sub->add_option("--seed", seed, "random seed");
  };
  auto* sample = app.add_subcommand("sample", "evaluate fields on a planar grid, write CSV and PPM");
  add_common(sample, true);
  auto* trace = app.add_subcommand("trace", "trace congruence rays launched from the disk");
  add_common(trace, true);
  auto* verify = app.add_subcommand("verify", "run residual suites and print JSON reports");
  add_common(verify, false);
  verify->add_option("suites", suites, "suite names");
  verify->add_flag("--all", all, "run every suite");
  verify->add_option("--n", n, "points per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 3;
  }

  try {
    if (sample->parsed()) {
      const auto rc = load_config(config_path);
      const auto dir = prepare_dir(out_dir);
      const auto res = render_sample(rc, threads);
      write_file(dir / rc.csv_name, res.csv);
      if (rc.image) {
        write_file(dir / rc.ppm_name, res.ppm);
        err << rc.image->quantity << " min=" << res.vmin << " max=" << res.vmax << "\n";
      }
      if (res.singular_cells) err << res.singular_cells << " singular cells\n";
      return 0;
    }
    if (trace->parsed()) {
      const auto rc = load_config(config_path);
      const auto dir = prepare_dir(out_dir);
      write_file(dir / rc.trace_name, render_trace(rc));
      return 0;
    }

    RunConfig rc;
    if (!config_path.empty()) rc = load_config(config_path);
    SamplePlan plan;
    plan.cfg = rc.cfg;
    plan.seed = verify->count("--seed") ? seed : rc.verify.seed;
    plan.n = n > 0 ? n : rc.verify.n;
    plan.pulse_d = rc.verify.pulse_d;
    plan.threads = threads;
    if (all) {
      suites = suite_names();
    } else if (suites.empty()) {
      suites = rc.verify.suites;
    }
    if (suites.empty()) {
      err << "verify: name at least one suite or pass --all\n";
      return 3;
    }
    const auto vr = run_verify(suites, plan);
    out << vr.json;
    if (!out_dir.empty() && verify->count("--out")) {
      write_file(prepare_dir(out_dir) / rc.verify_name, vr.json);
    }
    return vr.all_pass ? 0 : 1;
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::UnknownSuite: return 2;
      case ErrorCode::ConfigError: return 3;
      case ErrorCode::IoError: return 4;
      default: return 5;
    }
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 5;
  }
}

}  // namespace cwave::cli
