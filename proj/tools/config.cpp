#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "se2frame/framefield.hpp"
#include "se2frame/lattice.hpp"

namespace se2frame::cli {
namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "name",  "description", "p",          "sigma",        "p_sigma",   "rho",
      "num_angles", "angles", "shifts",     "lattice_basis", "grid",     "repetitions",
      "seed",  "output_dir",  "L",          "resolution",   "omega",     "test_function",
      "tail_tol", "oracle_grid"};
  return keys;
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path, "must be finite");
  return v;
}

double get_positive(const json& j, const std::string& path) {
  const double v = get_number(j, path);
  if (!(v > 0.0)) throw ConfigError(path, "must be positive");
  return v;
}

int get_int(const json& j, const std::string& path, int min_value) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < min_value || v > 1'000'000'000LL) {
    throw ConfigError(path, "must be an integer >= " + std::to_string(min_value));
  }
  return static_cast<int>(v);
}

Vec2 get_point(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(path, "expected [x, y]");
  return Vec2(get_number(j[0], path + "[0]"), get_number(j[1], path + "[1]"));
}

Complex get_complex(const json& j, const std::string& path) {
  if (j.is_number()) return Complex(get_number(j, path), 0.0);
  if (j.is_array() && j.size() == 2) {
    return Complex(get_number(j[0], path + "[0]"), get_number(j[1], path + "[1]"));
  }
  throw ConfigError(path, "expected a number or [re, im]");
}

json point_json(const Vec2& v) { return json::array({v.x(), v.y()}); }

}  // namespace

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  auto same_points = [](const std::optional<std::vector<Vec2>>& x,
                        const std::optional<std::vector<Vec2>>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    if (x->size() != y->size()) return false;
    for (std::size_t i = 0; i < x->size(); ++i) {
      if ((*x)[i] != (*y)[i]) return false;
    }
    return true;
  };
  auto same_bumps = [](const std::vector<Bump>& x, const std::vector<Bump>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].center != y[i].center || x[i].radius != y[i].radius ||
          x[i].coefficient != y[i].coefficient) {
        return false;
      }
    }
    return true;
  };
  const bool same_omega = a.omega.has_value() == b.omega.has_value() &&
                          (!a.omega || *a.omega == *b.omega);
  return a.name == b.name && a.description == b.description && a.p == b.p &&
         a.sigma == b.sigma && a.rho == b.rho && a.num_angles == b.num_angles &&
         a.angles == b.angles && same_points(a.shifts, b.shifts) &&
         a.lattice_basis == b.lattice_basis && a.grid == b.grid &&
         a.repetitions == b.repetitions && a.seed == b.seed && a.output_dir == b.output_dir &&
         a.L == b.L && a.resolution == b.resolution && same_omega &&
         same_bumps(a.test_function, b.test_function) && a.tail_tol == b.tail_tol &&
         a.oracle_grid == b.oracle_grid;
}

ExperimentConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("$", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("$", "top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (!known_keys().contains(key)) throw ConfigError(key, "unknown key");
  }

  ExperimentConfig cfg;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ConfigError("name", "expected a string");
    cfg.name = doc["name"].get<std::string>();
  }
  if (doc.contains("description")) {
    if (!doc["description"].is_string()) throw ConfigError("description", "expected a string");
    cfg.description = doc["description"].get<std::string>();
  }

  if (!doc.contains("p")) throw ConfigError("p", "required");
  cfg.p = get_positive(doc["p"], "p");

  const bool has_sigma = doc.contains("sigma");
  const bool has_shape = doc.contains("p_sigma");
  if (has_sigma && has_shape) throw ConfigError("p_sigma", "give either sigma or p_sigma, not both");
  if (has_sigma) {
    cfg.sigma = get_positive(doc["sigma"], "sigma");
  } else if (has_shape) {
    cfg.sigma = get_positive(doc["p_sigma"], "p_sigma") / cfg.p;
  } else {
    throw ConfigError("sigma", "required (or p_sigma)");
  }

  if (doc.contains("rho")) cfg.rho = get_positive(doc["rho"], "rho");
  if (doc.contains("num_angles")) cfg.num_angles = get_int(doc["num_angles"], "num_angles", 1);

  if (doc.contains("angles")) {
    const json& a = doc["angles"];
    if (!a.is_array() || a.empty()) throw ConfigError("angles", "expected a non-empty array");
    std::vector<double> angles;
    for (std::size_t i = 0; i < a.size(); ++i) {
      angles.push_back(get_number(a[i], "angles[" + std::to_string(i) + "]"));
    }
    try {
      validate_angles(angles);
    } catch (const InvalidArgument& e) {
      throw ConfigError("angles", e.what());
    }
    if (cfg.num_angles && *cfg.num_angles != static_cast<int>(angles.size())) {
      throw ConfigError("angles", "length " + std::to_string(angles.size()) +
                                      " differs from num_angles " +
                                      std::to_string(*cfg.num_angles));
    }
    cfg.num_angles = static_cast<int>(angles.size());
    cfg.angles = std::move(angles);
  }

  if (doc.contains("lattice_basis")) {
    const json& b = doc["lattice_basis"];
    if (!b.is_array() || b.size() != 2 || !b[0].is_array() || !b[1].is_array() ||
        b[0].size() != 2 || b[1].size() != 2) {
      throw ConfigError("lattice_basis", "expected [[a, b], [c, d]]");
    }
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        cfg.lattice_basis(r, c) = get_number(
            b[r][c], "lattice_basis[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      }
    }
    try {
      (void)make_lattice(cfg.lattice_basis);
    } catch (const SingularBasis& e) {
      throw ConfigError("lattice_basis", e.what());
    }
  }

  if (doc.contains("shifts")) {
    const json& s = doc["shifts"];
    if (!s.is_array() || s.empty()) throw ConfigError("shifts", "expected a non-empty array");
    std::vector<Vec2> shifts;
    for (std::size_t i = 0; i < s.size(); ++i) {
      shifts.push_back(get_point(s[i], "shifts[" + std::to_string(i) + "]"));
    }
    if (cfg.num_angles && *cfg.num_angles != static_cast<int>(shifts.size())) {
      throw ConfigError("shifts", "length " + std::to_string(shifts.size()) +
                                      " differs from num_angles " +
                                      std::to_string(*cfg.num_angles));
    }
    try {
      validate_shifts(shifts, make_lattice(cfg.lattice_basis));
    } catch (const InvalidArgument& e) {
      throw ConfigError("shifts", e.what());
    }
    cfg.num_angles = static_cast<int>(shifts.size());
    cfg.shifts = std::move(shifts);
  }

  if (doc.contains("grid")) cfg.grid = get_int(doc["grid"], "grid", 1);
  if (doc.contains("repetitions")) cfg.repetitions = get_int(doc["repetitions"], "repetitions", 1);
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw ConfigError("seed", "expected a nonnegative integer");
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("output_dir")) {
    if (!doc["output_dir"].is_string()) throw ConfigError("output_dir", "expected a string");
    cfg.output_dir = doc["output_dir"].get<std::string>();
  }
  if (doc.contains("L")) cfg.L = get_positive(doc["L"], "L");
  if (doc.contains("resolution")) cfg.resolution = get_int(doc["resolution"], "resolution", 1);
  if (doc.contains("omega")) cfg.omega = get_point(doc["omega"], "omega");
  if (doc.contains("tail_tol")) cfg.tail_tol = get_positive(doc["tail_tol"], "tail_tol");
  if (doc.contains("oracle_grid")) cfg.oracle_grid = get_int(doc["oracle_grid"], "oracle_grid", 1);

  if (doc.contains("test_function")) {
    const json& tf = doc["test_function"];
    if (!tf.is_object() || !tf.contains("bumps") || !tf["bumps"].is_array()) {
      throw ConfigError("test_function", "expected {\"bumps\": [...]}");
    }
    const json& bumps = tf["bumps"];
    for (std::size_t i = 0; i < bumps.size(); ++i) {
      const std::string path = "test_function.bumps[" + std::to_string(i) + "]";
      const json& b = bumps[i];
      if (!b.is_object() || !b.contains("center") || !b.contains("radius")) {
        throw ConfigError(path, "expected {\"center\", \"radius\", \"coefficient\"}");
      }
      Bump bump;
      bump.center = get_point(b["center"], path + ".center");
      bump.radius = get_positive(b["radius"], path + ".radius");
      bump.coefficient = b.contains("coefficient")
                             ? get_complex(b["coefficient"], path + ".coefficient")
                             : Complex(1.0, 0.0);
      if (cfg.rho && !(bump.center.norm() + bump.radius < *cfg.rho)) {
        throw ConfigError(path, "support must lie strictly inside B(0, rho)");
      }
      cfg.test_function.push_back(bump);
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("$", "cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
  json doc;
  if (!cfg.name.empty()) doc["name"] = cfg.name;
  if (!cfg.description.empty()) doc["description"] = cfg.description;
  doc["p"] = cfg.p;
  doc["sigma"] = cfg.sigma;
  if (cfg.rho) doc["rho"] = *cfg.rho;
  if (cfg.num_angles) doc["num_angles"] = *cfg.num_angles;
  if (cfg.angles) doc["angles"] = *cfg.angles;
  if (cfg.shifts) {
    json s = json::array();
    for (const Vec2& v : *cfg.shifts) s.push_back(point_json(v));
    doc["shifts"] = s;
  }
  doc["lattice_basis"] = json::array({json::array({cfg.lattice_basis(0, 0), cfg.lattice_basis(0, 1)}),
                                      json::array({cfg.lattice_basis(1, 0), cfg.lattice_basis(1, 1)})});
  doc["grid"] = cfg.grid;
  doc["repetitions"] = cfg.repetitions;
  doc["seed"] = cfg.seed;
  doc["output_dir"] = cfg.output_dir;
  if (cfg.L) doc["L"] = *cfg.L;
  doc["resolution"] = cfg.resolution;
  if (cfg.omega) doc["omega"] = point_json(*cfg.omega);
  if (!cfg.test_function.empty()) {
    json bumps = json::array();
    for (const Bump& b : cfg.test_function) {
      bumps.push_back({{"center", point_json(b.center)},
                       {"radius", b.radius},
                       {"coefficient", json::array({b.coefficient.real(), b.coefficient.imag()})}});
    }
    doc["test_function"] = {{"bumps", bumps}};
  }
  doc["tail_tol"] = cfg.tail_tol;
  doc["oracle_grid"] = cfg.oracle_grid;
  return doc.dump(2);
}

double require_rho(const ExperimentConfig& cfg) {
  if (!cfg.rho) throw ConfigError("rho", "required for this command");
  return *cfg.rho;
}

int require_num_angles(const ExperimentConfig& cfg) {
  if (!cfg.num_angles) throw ConfigError("num_angles", "required for this command");
  return *cfg.num_angles;
}

std::vector<double> resolve_angles(const ExperimentConfig& cfg) {
  if (cfg.angles) return *cfg.angles;
  return equally_spaced_angles(require_num_angles(cfg));
}

double resolve_L(const ExperimentConfig& cfg) {
  if (cfg.L) return *cfg.L;
  return 1.0 / std::sqrt(covolume(make_lattice(cfg.lattice_basis)));
}

SamplingSpec make_sampling_spec(const ExperimentConfig& cfg, bool need_shifts) {
  const double rho = require_rho(cfg);
  std::vector<double> angles = resolve_angles(cfg);
  std::vector<Vec2> shifts;
  if (cfg.shifts) {
    shifts = *cfg.shifts;
  } else if (need_shifts) {
    shifts = draw_shifts(cfg.seed, 0, static_cast<int>(angles.size()));
  }
  try {
    return SamplingSpec::make(WaveletParams::make(cfg.p, cfg.sigma),
                              make_lattice(cfg.lattice_basis), rho, std::move(angles),
                              std::move(shifts));
  } catch (const InvalidArgument& e) {
    throw ConfigError("$", e.what());
  }
}

}  // namespace se2frame::cli
