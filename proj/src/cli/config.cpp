#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>

#include "airs/cli.hpp"

namespace airs::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

int parse_count(std::string_view key, std::string_view value) {
  const double v = parse_quantity(value);
  if (v != std::floor(v) || v < 1.0 || v > 1e9) {
    throw ConfigError(std::string(key) + " must be a positive integer, got '" + std::string(value) + "'");
  }
  return static_cast<int>(v);
}

}  // namespace

double parse_quantity(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr == text.data()) {
    throw ConfigError("not a number: '" + std::string(text) + "'");
  }
  const std::string unit = lower(trim(std::string_view(ptr, static_cast<std::size_t>(text.data() + text.size() - ptr))));
  if (unit.empty() || unit == "w" || unit == "m" || unit == "hz") return v;
  if (unit == "dbm") return dbm_to_watts(v);
  if (unit == "db") return db_to_linear(v);
  if (unit == "khz") return v * 1e3;
  if (unit == "mhz") return v * 1e6;
  if (unit == "ghz") return v * 1e9;
  throw ConfigError("unknown unit '" + unit + "' in '" + std::string(text) + "'");
}

void apply_setting(SystemParams& p, std::string_view raw_key, std::string_view value) {
  const std::string key = lower(trim(raw_key));
  value = trim(value);
  if (key == "j" || key == "num_irs") {
    p.num_irs = parse_count(key, value);
  } else if (key == "m" || key == "bs_antennas") {
    p.bs_antennas = parse_count(key, value);
  } else if (key == "na") {
    p.active = ArrayShape::square_ish(parse_count(key, value));
  } else if (key == "na_x") {
    p.active.nx = parse_count(key, value);
  } else if (key == "na_z") {
    p.active.nz = parse_count(key, value);
  } else if (key == "np") {
    p.passive = ArrayShape::square_ish(parse_count(key, value));
  } else if (key == "np_x") {
    p.passive.nx = parse_count(key, value);
  } else if (key == "np_z") {
    p.passive.nz = parse_count(key, value);
  } else if (key == "d_b") {
    p.dist_bs = parse_quantity(value);
  } else if (key == "d_u") {
    p.dist_user = parse_quantity(value);
  } else if (key == "d_i") {
    p.dist_inter = parse_quantity(value);
  } else if (key == "pt") {
    p.tx_power = parse_quantity(value);
  } else if (key == "pa") {
    p.amp_power = parse_quantity(value);
  } else if (key == "sigma2" || key == "noise") {
    p.noise_power = parse_quantity(value);
  } else if (key == "alpha") {
    p.pathloss_exponent = parse_quantity(value);
  } else if (key == "beta0") {
    p.ref_gain = parse_quantity(value);
  } else if (key == "wavelength") {
    p.wavelength = parse_quantity(value);
  } else if (key == "carrier") {
    p.wavelength = kSpeedOfLight / parse_quantity(value);
  } else if (key == "spacing") {
    p.bs_spacing = p.irs_spacing = parse_quantity(value);
  } else if (key == "bs_spacing") {
    p.bs_spacing = parse_quantity(value);
  } else if (key == "irs_spacing") {
    p.irs_spacing = parse_quantity(value);
  } else if (key == "fraunhofer") {
    p.fraunhofer_distance = parse_quantity(value);
  } else {
    throw ConfigError("unknown config key '" + std::string(raw_key) + "'");
  }
}

SystemParams parse_config(std::istream& in, SystemParams base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    try {
      apply_setting(base, view.substr(0, eq), view.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

SystemParams load_config(const std::filesystem::path& path, SystemParams base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  return parse_config(in, std::move(base));
}

}  // namespace airs::cli
