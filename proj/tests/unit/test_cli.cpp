#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cwave/errors.hpp"

using namespace cwave;
using nlohmann::json;

namespace {
int run_args(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "cwavelet");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

ErrorCode parse_error(const json& j) {
  try {
    cli::parse_config(j);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("config was accepted");
  return ErrorCode::DomainError;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (auto pos = s.find("\r\n"); pos != std::string::npos; pos = s.find("\r\n", start)) {
    lines.push_back(s.substr(start, pos - start));
    start = pos + 2;
  }
  return lines;
}

json small_config() {
  return json::parse(R"({
    "a": 1, "s": 1, "pulse": {"type": "gaussian", "d": 0.3},
    "gauge": {"kappa": 0.2, "lambda": [0, -1], "mu": [0, 0.1]},
    "helicity": "+", "time": 2.0,
    "grid": {"plane": "xz", "extent": [-2, 2, -2, 2], "nx": 9, "ny": 7},
    "quantities": ["psi", "E", "inertia", "twist"],
    "image": {"quantity": "abs_f", "log": true},
    "trace": {"rho0": [0, 0.6], "rays_per_ring": 3, "z_sign": "both", "t_max": 4, "nt": 5}
  })");
}
}  // namespace

TEST_CASE("config parsing") {
  const auto rc = cli::parse_config(small_config());
  CHECK(rc.cfg.a == 1.0);
  CHECK(rc.gauge.lambda == cplx(0.0, -1.0));
  CHECK(rc.gauge.kappa == cplx(0.2));
  CHECK(rc.grid.nx == 9);
  CHECK(rc.image->log_scale);
  CHECK(rc.trace.z_signs.size() == 2);

  const auto defaults = cli::parse_config(json::object());
  CHECK(defaults.quantities == std::vector<std::string>{"psi"});
  CHECK(defaults.helicity == Helicity::Plus);
  CHECK(!defaults.image);

  CHECK(cli::parse_config(json{{"helicity", -1}}).helicity == Helicity::Minus);
  CHECK(cli::parse_config(json{{"helicity", "minus"}}).helicity == Helicity::Minus);
}

TEST_CASE("config errors") {
  CHECK(parse_error(json{{"bogus", 1}}) == ErrorCode::ConfigError);
  CHECK(parse_error(json{{"a", -1.0}}) == ErrorCode::ConfigError);
  CHECK(parse_error(json{{"grid", {{"nx", 0}}}}) == ErrorCode::ConfigError);
  CHECK(parse_error(json{{"quantities", {"psi", "nope"}}}) == ErrorCode::ConfigError);
  CHECK(parse_error(json{{"helicity", "sideways"}}) == ErrorCode::ConfigError);
  CHECK(parse_error(json{{"image", {{"quantity", "phase"}}}}) == ErrorCode::ConfigError);
  // twist needs a null gauge for the chosen helicity.
  CHECK(parse_error(json{{"quantities", {"twist"}}, {"gauge", {{"lambda", 0.5}}}}) == ErrorCode::ConfigError);
  CHECK(parse_error(json{{"pulse", {{"type", "tabulated"}, {"csv", "/nonexistent.csv"}}}}) == ErrorCode::IoError);

  try {
    cli::load_config("/nonexistent/config.json");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}

TEST_CASE("sample CSV layout and thread independence") {
  const auto rc = cli::parse_config(small_config());
  const auto one = cli::render_sample(rc, 1);
  const auto many = cli::render_sample(rc, 8);
  CHECK(one.csv == many.csv);
  CHECK(one.ppm == many.ppm);

  const auto lines = split_lines(one.csv);
  REQUIRE(lines.size() == 1 + 9 * 7);
  CHECK(lines[0].rfind("x,y,z,t,re_psi,im_psi,re_E_x,im_E_x", 0) == 0);
  CHECK(lines[0].find(",inertia,") != std::string::npos);
  CHECK(lines[0].find("re_twist,im_twist") != std::string::npos);
  CHECK(lines[0].substr(lines[0].size() - 9) == ",singular");

  // First row is the top-left cell centre: x = -2 + 4/18, z = 2 - 4/14.
  std::istringstream first(lines[1]);
  double x, y, z;
  char comma;
  first >> x >> comma >> y >> comma >> z;
  CHECK(x == doctest::Approx(-2.0 + 4.0 / 18.0));
  CHECK(y == 0.0);
  CHECK(z == doctest::Approx(2.0 - 4.0 / 14.0));

  CHECK(one.ppm.rfind("P6\n9 7\n255\n", 0) == 0);
  CHECK(one.ppm.size() == std::string("P6\n9 7\n255\n").size() + 9 * 7 * 3);
  CHECK(one.vmin <= one.vmax);
}

TEST_CASE("singular cells are flagged") {
  auto j = small_config();
  // The xy plane through z = 0 hits the disk; a 3x3 grid centred on the
  // origin puts its middle cell on the axis too.
  j["grid"] = {{"plane", "xy"}, {"extent", {-1.5, 1.5, -1.5, 1.5}}, {"nx", 3}, {"ny", 3}};
  const auto res = cli::render_sample(cli::parse_config(j), 1);
  CHECK(res.singular_cells >= 1);
  CHECK(res.csv.find("nan") != std::string::npos);
}

TEST_CASE("trace output") {
  const auto csv = cli::render_trace(cli::parse_config(small_config()));
  const auto lines = split_lines(csv);
  CHECK(lines[0] == "ray_id,t,x,y,z,xi,eta");
  // rho0 = 0 gives one ray per z sign, rho0 = 0.6 gives 3 per sign.
  CHECK(lines.size() == 1 + (2 + 6) * 5);
}

TEST_CASE("command-line entry point") {
  std::string text;
  CHECK(run_args({"verify", "congruence_match", "--n", "20"}, &text) == 0);
  const auto reports = json::parse(text);
  REQUIRE(reports.is_array());
  CHECK(reports[0]["suite"] == "congruence_match");
  CHECK(reports[0]["n"] == 20);

  CHECK(run_args({"verify", "bogus"}) == 2);
  CHECK(run_args({"verify", "lorenz", "bogus", "--n", "5"}) == 2);
  CHECK(run_args({"verify"}) == 3);
  CHECK(run_args({"sample"}) == 3);
  CHECK(run_args({"sample", "--config", "/nonexistent.json"}) == 4);

  const auto dir = std::filesystem::temp_directory_path() / "cwave_cli_test";
  std::filesystem::create_directories(dir);
  const auto cfg_path = dir / "bad.json";
  std::ofstream(cfg_path) << "{ not json";
  CHECK(run_args({"sample", "--config", cfg_path.string()}) == 3);

  const auto good = dir / "good.json";
  std::ofstream(good) << small_config().dump();
  CHECK(run_args({"sample", "--config", good.string(), "--out", (dir / "out").string(), "--threads", "2"}) == 0);
  CHECK(std::filesystem::exists(dir / "out" / "sample.csv"));
  CHECK(std::filesystem::exists(dir / "out" / "sample.ppm"));
  CHECK(run_args({"trace", "--config", good.string(), "--out", (dir / "out").string()}) == 0);
  CHECK(std::filesystem::exists(dir / "out" / "trace.csv"));
  std::filesystem::remove_all(dir);
}

namespace {
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t col(const std::string& name) const {
    return std::find(header.begin(), header.end(), name) - header.begin();
  }
};

Table parse_csv(const std::string& csv) {
  Table t;
  const auto lines = split_lines(csv);
  auto split = [](const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
    return out;
  };
  t.header = split(lines.at(0));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<double> row;
    for (const auto& cell : split(lines[i])) row.push_back(std::stod(cell));
    t.rows.push_back(row);
  }
  return t;
}

json grid_config(const std::string& image, std::vector<std::string> quantities, json gauge) {
  return json{{"a", 1.0},
              {"s", 1.0},
              {"pulse", {{"type", "gaussian"}, {"d", 0.3}}},
              {"gauge", gauge},
              {"time", 3.0},
              {"grid", {{"plane", "xz"}, {"extent", {-5, 5, -5, 5}}, {"nx", 41}, {"ny", 40}}},
              {"quantities", quantities},
              {"image", {{"quantity", image}}}};
}
}  // namespace

TEST_CASE("coherent wavelet inertia is dark everywhere off the singular sets") {
  const json null_gauge = {{"kappa", 0.2}, {"lambda", {0, -1}}, {"mu", {0, 0.1}}};
  const auto res = cli::render_sample(cli::parse_config(grid_config("inertia", {"u", "inertia"}, null_gauge)), 2);
  const auto t = parse_csv(res.csv);
  const auto iu = t.col("u"), ii = t.col("inertia"), is = t.col("singular");
  int finite = 0;
  for (const auto& r : t.rows) {
    if (r[is] != 0.0) continue;
    ++finite;
    CHECK(r[ii] <= 1e-10 * r[iu]);
  }
  CHECK(finite > 1000);
}

TEST_CASE("generic gauge inertia: bright near zone, fading far zone") {
  const json generic = {{"kappa", 0.0}, {"lambda", 0.0}, {"mu", 0.0}};
  const auto res = cli::render_sample(cli::parse_config(grid_config("inertia", {"u", "inertia"}, generic)), 2);
  const auto t = parse_csv(res.csv);
  double near = 0.0, far = 0.0;
  for (const auto& r : t.rows) {
    if (r[t.col("singular")] != 0.0) continue;
    const double rr = std::hypot(r[0], r[2]);
    const double ratio = r[t.col("inertia")] / r[t.col("u")];
    if (rr < 1.5) near = std::max(near, ratio);
    if (rr > 4.0) far = std::max(far, ratio);
  }
  CHECK(near > 0.1);
  CHECK(far < near);
}

TEST_CASE("psi snapshot: shell near xi = t, image argmax matches CSV argmax") {
  const auto res = cli::render_sample(cli::parse_config(grid_config("abs_psi", {"psi"}, json::object())), 2);
  const auto t = parse_csv(res.csv);
  const auto img = t.col("abs_psi");
  REQUIRE(img < t.header.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.rows[i][img] > t.rows[best][img]) best = i;
  }
  const Point3 x{t.rows[best][0], t.rows[best][1], t.rows[best][2]};
  CHECK(std::abs(complex_distance(x, {1.0, 1.0}).xi - 3.0) < 0.5);

  const std::string head = "P6\n41 40\n255\n";
  REQUIRE(res.ppm.rfind(head, 0) == 0);
  std::size_t best_px = 0;
  int best_val = -1;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto px = static_cast<unsigned char>(res.ppm[head.size() + 3 * i + 1]);  // green: skips red sentinels
    if (px > best_val) {
      best_val = px;
      best_px = i;
    }
  }
  CHECK(best_val == 255);
  CHECK(t.rows[best_px][img] == t.rows[best][img]);
}
