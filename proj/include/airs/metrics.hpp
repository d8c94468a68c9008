#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include "airs/params.hpp"

namespace airs {

/// WIT maximises received SNR, WPT maximises received power.
enum class Mode { wit, wpt };

[[nodiscard]] std::string to_string(Mode m);
/// Accepts "wit" / "wpt" (case-insensitive). Throws std::invalid_argument otherwise.
[[nodiscard]] Mode parse_mode(std::string_view s);

/// Everything the closed-form objectives need, with the link budget derived once.
struct CascadeModel {
  LinkBudget budget;
  int num_irs = 1;
  int np = 1;
  int na = 1;
  int bs_antennas = 1;
  double tx_power = 0.0;
  double amp_power = 0.0;
  double noise_power = 0.0;

  static CascadeModel from(const SystemParams& p);
};

struct ObjectiveValue {
  double value = 0.0;  // SNR (linear) for WIT, watts for WPT
  int index = 1;
  Mode mode = Mode::wit;

  /// dB for SNR, dBm for power.
  [[nodiscard]] double db() const;
};

/// f(l) = kappa_B^2 (Np kappa_I)^{2(l-1)}.
[[nodiscard]] double effective_gain(const CascadeModel& m, int l);

/// Received SNR with optimal beamforming and the active surface at index l.
/// Evaluated as a log-sum-exp so (Np kappa_I)^{2(J-1)} never underflows.
[[nodiscard]] double snr_closed(const CascadeModel& m, int l);
[[nodiscard]] double log_snr_closed(const CascadeModel& m, int l);

/// log(C_a x^{2(J-l)} + C_t x^{2(l-1)}), the only l-dependent part of the SNR.
/// The SNR is strictly decreasing in it, and it stays resolvable when sigma^4
/// swamps the full denominator, so index comparisons use it instead.
[[nodiscard]] double log_snr_penalty(const CascadeModel& m, int l);

/// Larger is better; equal keys mean equal objectives.
[[nodiscard]] double log_rank_key(const CascadeModel& m, int l, Mode mode);

/// Received signal-plus-amplified-noise power (watts), receiver noise excluded.
[[nodiscard]] double power_closed(const CascadeModel& m, int l);
[[nodiscard]] double log_power_closed(const CascadeModel& m, int l);

[[nodiscard]] double log_objective(const CascadeModel& m, int l, Mode mode);
[[nodiscard]] ObjectiveValue objective(const CascadeModel& m, int l, Mode mode);

/// Exponent of Np in the large-Np growth of the SNR: 2(l-1) below the middle
/// surface, 2(J-l) from the middle on.
[[nodiscard]] int snr_scaling_order(int l, int num_irs);
/// 2(J-l) for every l.
[[nodiscard]] int power_scaling_order(int l, int num_irs);

/// log(exp(a) + exp(b) + ...), tolerating -inf terms.
[[nodiscard]] double log_sum_exp(std::initializer_list<double> terms);

}  // namespace airs
