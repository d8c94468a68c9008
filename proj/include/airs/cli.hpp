#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "airs/deployment.hpp"
#include "airs/params.hpp"

namespace airs::cli {

/// Bad config file, flag value or sweep spec. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output. Maps to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- config

/// Applies one `key = value` setting. Values may carry a unit suffix:
/// `dBm` (to watts), `dB` (to linear), `W`, `m`, `Hz`, `kHz`, `MHz`, `GHz`.
void apply_setting(SystemParams& p, std::string_view key, std::string_view value);

/// Flat `key = value` lines; `#` starts a comment. Unknown keys are errors.
[[nodiscard]] SystemParams parse_config(std::istream& in, SystemParams base = {});
[[nodiscard]] SystemParams load_config(const std::filesystem::path& path, SystemParams base = {});

/// Locale-independent parse of a number with an optional unit suffix.
[[nodiscard]] double parse_quantity(std::string_view text);

// ----------------------------------------------------------------- sweep

enum class SweepScale { linear, log, step };

struct SweepSpec {
  std::string variable = "np";
  int min = 10;
  int max = 1400;
  SweepScale scale = SweepScale::log;
  int count = 50;  // points for linear/log, increment for step
};

/// `min:max:scale:count` with scale in {lin, linear, log, step}; for `step`
/// the last field is the increment.
[[nodiscard]] SweepSpec parse_sweep(std::string_view text);

/// Sorted, de-duplicated integer grid (log points are rounded to nearest).
[[nodiscard]] std::vector<int> sweep_values(const SweepSpec& spec);

// ------------------------------------------------------------------- csv

/// 10 significant digits, dot decimal separator.
[[nodiscard]] std::string format_number(double v);

struct EvalRow {
  int np = 0;
  Mode mode = Mode::wit;
  DeploymentSolution solution;
  double middle_db = 0.0;
  double all_pirs_db = 0.0;
};

/// Copy of `p` with `np` passive elements per surface (most-square layout).
[[nodiscard]] SystemParams with_passive_count(SystemParams p, int np);

[[nodiscard]] EvalRow evaluate(const SystemParams& p, Mode mode);

[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string csv_row(const EvalRow& row);

void write_sweep(std::ostream& out, const SystemParams& p, Mode mode, const std::vector<int>& nps);

/// fig2.csv (optimal indices), fig3.csv (SNR curves), fig4.csv (power curves).
void write_figures(const std::filesystem::path& dir, const SystemParams& p, const std::vector<int>& nps);

// ------------------------------------------------------------ validation

/// Parameter grid around the reference scenario: J in 1..9, Np log-spaced
/// over 2..1024, P_a, P_t and Na each at -20/0/+20 dB. Only points with
/// Np kappa_I < 1 are kept.
[[nodiscard]] std::vector<SystemParams> placement_grid(const SystemParams& base = {});

struct GridReport {
  int configs = 0;
  int wit_mismatches = 0;
  int wpt_mismatches = 0;
  int wpt_not_last = 0;
};

[[nodiscard]] GridReport check_placements(const std::vector<SystemParams>& grid);

// ------------------------------------------------------------------ main

/// Full command line front end. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace airs::cli
