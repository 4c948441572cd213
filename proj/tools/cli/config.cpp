#include "config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "cwave/errors.hpp"
#include "cwave/verify/suites.hpp"

namespace cwave::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::ConfigError, msg); }

double number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) fail(std::string("'") + key + "' must be a number");
  return j.at(key).get<double>();
}

int integer(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) fail(std::string("'") + key + "' must be an integer");
  return j.at(key).get<int>();
}

cplx complex_value(const json& j, const char* key) {
  if (!j.contains(key)) return 0.0;
  const auto& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  fail(std::string("gauge '") + key + "' must be a number or [re, im]");
}

Helicity helicity_value(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "+" || s == "plus") return Helicity::Plus;
    if (s == "-" || s == "minus") return Helicity::Minus;
  } else if (v.is_number_integer()) {
    const int k = v.get<int>();
    if (k == 1) return Helicity::Plus;
    if (k == -1) return Helicity::Minus;
  }
  fail("helicity must be \"+\", \"-\", 1 or -1");
}

Plane plane_value(const std::string& s) {
  if (s == "xz") return Plane::XZ;
  if (s == "xy") return Plane::XY;
  if (s == "yz") return Plane::YZ;
  fail("grid.plane must be one of xz, xy, yz");
}

std::string string_value(const json& j, const char* key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) fail(std::string("'") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

void check_keys(const json& j, const char* where, std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || item.key() == k;
    if (!ok) fail(std::string("unknown key '") + item.key() + "' in " + where);
  }
}

}  // namespace

const std::vector<std::string>& quantity_names() {
  static const std::vector<std::string> names = {"psi", "E", "B", "F", "coherent", "u", "inertia", "twist"};
  return names;
}

RunConfig parse_config(const json& j, const std::string& base_dir) {
  if (!j.is_object()) fail("config must be a JSON object");
  check_keys(j, "config", {"a", "s", "axis", "pulse", "gauge", "helicity", "time", "grid", "quantities",
                           "image", "trace", "verify", "output"});
  RunConfig rc;
  rc.cfg.a = number(j, "a", 1.0);
  rc.cfg.s = number(j, "s", 1.0);
  try {
    rc.cfg.validate();
  } catch (const Error& e) {
    fail(e.what());
  }

  if (j.contains("axis")) {
    const auto& ax = j.at("axis");
    if (!ax.is_array() || ax.size() != 3) fail("axis must be [x, y, z]");
    for (int k = 0; k < 3; ++k) {
      if (!ax[k].is_number()) fail("axis components must be numbers");
      rc.axis[k] = ax[k].get<double>();
    }
    if (!(norm(rc.axis) > 0.0)) fail("axis must be nonzero");
  }

  rc.wavelet.cfg = rc.cfg;
  if (j.contains("pulse")) {
    const auto& p = j.at("pulse");
    check_keys(p, "pulse", {"type", "d", "csv"});
    const auto type = string_value(p, "type", "gaussian");
    try {
      if (type == "gaussian") {
        rc.wavelet.pulse = PulseSpec::gaussian(number(p, "d", 1.0));
      } else if (type == "tabulated") {
        auto path = std::filesystem::path(string_value(p, "csv", ""));
        if (path.empty()) fail("tabulated pulse needs 'csv'");
        if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
        rc.wavelet.pulse = PulseSpec::load_csv(path.string());
      } else {
        fail("pulse.type must be gaussian or tabulated");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::IoError) throw;
      throw Error(ErrorCode::ConfigError, e.what());
    }
  }

  if (j.contains("gauge")) {
    const auto& g = j.at("gauge");
    check_keys(g, "gauge", {"kappa", "lambda", "mu"});
    rc.gauge = {complex_value(g, "kappa"), complex_value(g, "lambda"), complex_value(g, "mu")};
  }
  if (j.contains("helicity")) rc.helicity = helicity_value(j.at("helicity"));
  rc.time = number(j, "time", 0.0);

  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    check_keys(g, "grid", {"plane", "offset", "extent", "nx", "ny"});
    rc.grid.plane = plane_value(string_value(g, "plane", "xz"));
    rc.grid.offset = number(g, "offset", 0.0);
    if (g.contains("extent")) {
      const auto& e = g.at("extent");
      if (!e.is_array() || e.size() != 4) fail("grid.extent must be [hmin, hmax, vmin, vmax]");
      for (int k = 0; k < 4; ++k) {
        if (!e[k].is_number()) fail("grid.extent entries must be numbers");
        rc.grid.extent[k] = e[k].get<double>();
      }
    }
    if (!(rc.grid.extent[1] > rc.grid.extent[0]) || !(rc.grid.extent[3] > rc.grid.extent[2])) {
      fail("grid.extent must have hmax > hmin and vmax > vmin");
    }
    rc.grid.nx = integer(g, "nx", 64);
    rc.grid.ny = integer(g, "ny", 64);
    if (rc.grid.nx < 1 || rc.grid.ny < 1 || rc.grid.nx > 8192 || rc.grid.ny > 8192) {
      fail("grid.nx and grid.ny must be in [1, 8192]");
    }
  }

  if (j.contains("quantities")) {
    const auto& q = j.at("quantities");
    if (!q.is_array()) fail("quantities must be an array of names");
    rc.quantities.clear();
    for (const auto& item : q) {
      if (!item.is_string()) fail("quantities must be strings");
      const auto name = item.get<std::string>();
      const auto& known = quantity_names();
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        fail("unknown quantity '" + name + "'");
      }
      rc.quantities.push_back(name);
    }
  }

  if (j.contains("image")) {
    const auto& im = j.at("image");
    check_keys(im, "image", {"quantity", "log"});
    ImageSpec spec;
    spec.quantity = string_value(im, "quantity", "abs_psi");
    if (spec.quantity != "abs_psi" && spec.quantity != "abs_f" && spec.quantity != "inertia" &&
        spec.quantity != "abs_twist" && spec.quantity != "u") {
      fail("image.quantity must be abs_psi, abs_f, inertia, abs_twist or u");
    }
    if (im.contains("log")) {
      if (!im.at("log").is_boolean()) fail("image.log must be true or false");
      spec.log_scale = im.at("log").get<bool>();
    }
    rc.image = spec;
  }

  const bool wants_twist =
      std::find(rc.quantities.begin(), rc.quantities.end(), "twist") != rc.quantities.end() ||
      (rc.image && rc.image->quantity == "abs_twist");
  if (wants_twist && !rc.gauge.is_null(rc.helicity)) {
    fail("twist needs a null gauge: lambda = -i for helicity +, +i for helicity -");
  }

  if (j.contains("trace")) {
    const auto& t = j.at("trace");
    check_keys(t, "trace", {"rho0", "rays_per_ring", "z_sign", "t_max", "nt"});
    if (t.contains("rho0")) {
      const auto& r = t.at("rho0");
      if (!r.is_array()) fail("trace.rho0 must be an array");
      rc.trace.rho0.clear();
      for (const auto& v : r) {
        if (!v.is_number()) fail("trace.rho0 entries must be numbers");
        const double rho = v.get<double>();
        if (rho < 0.0 || rho > 1.0) fail("trace.rho0 entries must lie in [0, 1] (units of a)");
        rc.trace.rho0.push_back(rho);
      }
    }
    rc.trace.rays_per_ring = integer(t, "rays_per_ring", 16);
    if (rc.trace.rays_per_ring < 1) fail("trace.rays_per_ring must be >= 1");
    if (t.contains("z_sign")) {
      const auto& zs = t.at("z_sign");
      if (zs.is_string() && zs.get<std::string>() == "both") {
        rc.trace.z_signs = {1, -1};
      } else if (zs.is_number_integer() && (zs.get<int>() == 1 || zs.get<int>() == -1)) {
        rc.trace.z_signs = {zs.get<int>()};
      } else {
        fail("trace.z_sign must be 1, -1 or \"both\"");
      }
    }
    rc.trace.t_max = number(t, "t_max", 10.0);
    rc.trace.nt = integer(t, "nt", 101);
    if (!(rc.trace.t_max >= 0.0) || rc.trace.nt < 1) fail("trace needs t_max >= 0 and nt >= 1");
  }

  if (j.contains("verify")) {
    const auto& v = j.at("verify");
    check_keys(v, "verify", {"suites", "n", "seed", "pulse_d"});
    if (v.contains("suites")) {
      for (const auto& s : v.at("suites")) {
        if (!s.is_string()) fail("verify.suites must be strings");
        rc.verify.suites.push_back(s.get<std::string>());
      }
    }
    rc.verify.n = integer(v, "n", 1000);
    if (v.contains("seed")) {
      if (!v.at("seed").is_number_unsigned()) fail("verify.seed must be a non-negative integer");
      rc.verify.seed = v.at("seed").get<std::uint64_t>();
    }
    rc.verify.pulse_d = number(v, "pulse_d", 0.3);
  }

  if (j.contains("output")) {
    const auto& o = j.at("output");
    check_keys(o, "output", {"csv", "ppm", "trace_csv", "verify_json"});
    rc.csv_name = string_value(o, "csv", rc.csv_name);
    rc.ppm_name = string_value(o, "ppm", rc.ppm_name);
    rc.trace_name = string_value(o, "trace_csv", rc.trace_name);
    rc.verify_name = string_value(o, "verify_json", rc.verify_name);
  }
  return rc;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open config " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ConfigError, std::string("invalid JSON in ") + path + ": " + e.what());
  }
  const auto base = std::filesystem::path(path).parent_path().string();
  return parse_config(j, base.empty() ? "." : base);
}

}  // namespace cwave::cli
