#include "abflux/config.hpp"

#include "abflux/constants.hpp"
#include "abflux/errors.hpp"
#include "abflux/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace abflux {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, const char* expected) {
  throw ConfigError("invalid value '" + std::string(value) + "' for " + std::string(key) +
                    ": expected " + expected);
}

double parse_double(std::string_view key, std::string_view value) {
  if (!value.empty() && value.front() == '+') {
    value.remove_prefix(1);
  }
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
    bad_value(key, value, "a decimal number");
  }
  return out;
}

int parse_int(std::string_view key, std::string_view value) {
  if (!value.empty() && value.front() == '+') {
    value.remove_prefix(1);
  }
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
    bad_value(key, value, "an integer");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off") {
    return false;
  }
  bad_value(key, value, "true or false");
}

} // namespace

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "material") {
    cfg.material = std::string(value);
    lookup_material(cfg.material);
  } else if (key == "b_prime_gauss") {
    cfg.b_prime = gauss_to_tesla(parse_double(key, value));
  } else if (key == "open_area_m2") {
    cfg.open_area = parse_double(key, value);
  } else if (key == "core_flux_wb") {
    cfg.core_flux = parse_double(key, value);
  } else if (key == "orientation") {
    const int o = parse_int(key, value);
    if (o != 1 && o != -1) {
      bad_value(key, value, "+1 or -1");
    }
    cfg.orientation = o;
  } else if (key == "steps_per_quarter") {
    cfg.steps_per_quarter = parse_int(key, value);
  } else if (key == "cycles") {
    cfg.cycles = parse_int(key, value);
  } else if (key == "refine") {
    cfg.refine = parse_int(key, value);
  } else if (key == "verify") {
    cfg.verify = parse_bool(key, value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void apply_override(ExperimentConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("override '" + std::string(assignment) + "' is not key=value");
  }
  apply_setting(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
}

ExperimentConfig parse_config(std::string_view text, const ExperimentConfig& base) {
  ExperimentConfig cfg = base;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    try {
      apply_override(cfg, line);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path, const ExperimentConfig& base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("failed reading config file " + path.string());
  }
  try {
    return parse_config(buf.str(), base);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

namespace {

// Gauss value that converts back to exactly `tesla`, when one exists nearby.
double round_trip_gauss(double tesla) {
  const double g = tesla_to_gauss(tesla);
  double lo = g, hi = g;
  for (int i = 0; i < 8; ++i) {
    if (gauss_to_tesla(lo) == tesla) {
      return lo;
    }
    if (gauss_to_tesla(hi) == tesla) {
      return hi;
    }
    lo = std::nextafter(lo, -INFINITY);
    hi = std::nextafter(hi, INFINITY);
  }
  return g;
}

} // namespace

std::string format_config(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "material = " << cfg.material << '\n'
     << "b_prime_gauss = " << format_double(round_trip_gauss(cfg.b_prime)) << '\n'
     << "open_area_m2 = " << format_double(cfg.open_area) << '\n'
     << "core_flux_wb = " << format_double(cfg.core_flux) << '\n'
     << "orientation = " << cfg.orientation << '\n'
     << "steps_per_quarter = " << cfg.steps_per_quarter << '\n'
     << "cycles = " << cfg.cycles << '\n'
     << "refine = " << cfg.refine << '\n'
     << "verify = " << (cfg.verify ? "true" : "false") << '\n';
  return os.str();
}

} // namespace abflux
