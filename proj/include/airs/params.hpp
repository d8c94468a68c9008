#pragma once

#include <optional>
#include <string>
#include <vector>

namespace airs {

inline constexpr double kSpeedOfLight = 299792458.0;

/// Planar array dimensions; element count is nx * nz.
struct ArrayShape {
  int nx = 1;
  int nz = 1;

  [[nodiscard]] int count() const { return nx * nz; }

  /// Most-square factorisation of `n` (nx <= nz).
  static ArrayShape square_ish(int n);
};

/// Scalar description of the cascaded link. All quantities are linear SI
/// (watts, meters, dimensionless gains); dB conversions live at the I/O edges.
///
/// Defaults reproduce the reference scenario: J = 7 surfaces, 4 m / 10 m / 4 m
/// hops, 3.5 GHz carrier, -43 dB reference gain, 30 dBm transmit power,
/// -10 dBm per-element amplification budget, -60 dBm noise, 150 active
/// elements, 100 passive elements per surface.
struct SystemParams {
  int num_irs = 7;
  int bs_antennas = 10;
  ArrayShape active{10, 15};
  ArrayShape passive{10, 10};

  double dist_bs = 4.0;
  double dist_user = 4.0;
  double dist_inter = 10.0;

  double tx_power = 1.0;
  double amp_power = 1.0e-4;
  double noise_power = 1.0e-9;

  double pathloss_exponent = 2.0;
  double ref_gain = 5.011872336272722e-05;  // -43 dB
  double wavelength = kSpeedOfLight / 3.5e9;

  // Unset spacings follow the wavelength (half-wavelength arrays).
  std::optional<double> bs_spacing;
  std::optional<double> irs_spacing;

  // Far-field check distance; unset means 2 D^2 / lambda per hop.
  std::optional<double> fraunhofer_distance;

  [[nodiscard]] int na() const { return active.count(); }
  [[nodiscard]] int np() const { return passive.count(); }
  [[nodiscard]] double bs_element_spacing() const { return bs_spacing.value_or(wavelength / 2.0); }
  [[nodiscard]] double irs_element_spacing() const { return irs_spacing.value_or(wavelength / 2.0); }
};

/// Amplitude gains of the three hop types and the composite power constants
/// that appear in every closed-form objective.
struct LinkBudget {
  double kappa_bs = 0.0;     // BS -> first surface
  double kappa_inter = 0.0;  // surface -> surface
  double kappa_user = 0.0;   // last surface -> user
  double c_active = 0.0;     // P_a * Na * kappa_user^2
  double c_tx = 0.0;         // P_t * M * kappa_bs^2
  double np_kappa_inter = 0.0;

  /// The BS-to-AIRS gain shrinks with every extra passive hop.
  [[nodiscard]] bool gain_decreasing() const { return np_kappa_inter < 1.0; }
};

[[nodiscard]] double dbm_to_watts(double dbm);
[[nodiscard]] double watts_to_dbm(double watts);
[[nodiscard]] double db_to_linear(double db);
[[nodiscard]] double linear_to_db(double linear);

/// sqrt(beta0) / d^(alpha/2).
[[nodiscard]] double path_amplitude(double ref_gain, double exponent, double distance);

/// Throws std::invalid_argument on any nonpositive distance, power, gain or count.
[[nodiscard]] LinkBudget derive_link_budget(const SystemParams& p);

enum class Severity { error, warning };

struct Diagnostic {
  Severity severity;
  std::string code;
  std::string message;
};

/// Empty iff every invariant holds. Never throws.
[[nodiscard]] std::vector<Diagnostic> validate(const SystemParams& p);

[[nodiscard]] bool has_errors(const std::vector<Diagnostic>& diags);

[[nodiscard]] std::string to_string(Severity s);

}  // namespace airs
