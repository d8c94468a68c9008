#pragma once

#include <optional>
#include <string>

#include "airs/metrics.hpp"

namespace airs {

enum class CaseLabel { case_i, case_ii, case_iii, brute_force_fallback, final_irs };

/// "I", "II", "III", "brute-force-fallback", "final".
[[nodiscard]] std::string to_string(CaseLabel c);

struct DeploymentSolution {
  int index = 1;
  ObjectiveValue objective;
  CaseLabel case_label = CaseLabel::brute_force_fallback;
  std::optional<double> relaxed_index;  // stationary point of the relaxed WIT problem
  int brute_force_index = 1;
  bool brute_force_agrees = false;
};

/// Exhaustive argmax over l in [1, J]; ties go to the smaller index.
[[nodiscard]] DeploymentSolution brute_force_index(const CascadeModel& m, Mode mode);

/// (J+1)/2 + log(C_a/C_t) / (2 log(Np^2 kappa_I^2)). Empty for J = 1 or
/// outside the decreasing-gain regime.
[[nodiscard]] std::optional<double> relaxed_wit_index(const CascadeModel& m);

/// Np at which the WIT optimum saturates at J (C_a < C_t) or 1 (C_a > C_t):
/// (min(C_a,C_t)/max(C_a,C_t))^{1/(2(J-1))} / kappa_I. Empty when C_a = C_t or J = 1.
[[nodiscard]] std::optional<double> wit_saturation_np(const CascadeModel& m);

/// Closed-form WIT placement. Falls back to brute force (labelled as such)
/// when Np kappa_I >= 1.
[[nodiscard]] DeploymentSolution optimal_index_wit(const CascadeModel& m);

/// Closed-form WPT placement: always the last surface while Np kappa_I < 1.
[[nodiscard]] DeploymentSolution optimal_index_wpt(const CascadeModel& m);

[[nodiscard]] DeploymentSolution optimal_index(const CascadeModel& m, Mode mode);

/// (J+1)/2, rounding half down for even J.
[[nodiscard]] int middle_index(int num_irs);

/// Objective with the active surface at the middle of the cascade.
[[nodiscard]] ObjectiveValue scheme_middle(const CascadeModel& m, Mode mode);

/// All-passive cascade with the BS boosted to P_t + Na P_a. Index is reported as 0.
[[nodiscard]] ObjectiveValue scheme_all_pirs(const CascadeModel& m, Mode mode);
[[nodiscard]] double log_scheme_all_pirs(const CascadeModel& m, Mode mode);

/// Np below which the optimal active/passive cascade beats the all-passive
/// one for WPT in the vanishing-noise limit.
[[nodiscard]] double wpt_crossover_np(const CascadeModel& m);

/// Gains of the optimal placement over the two baselines. For WIT the
/// `formula` fields hold the lower bound obtained by evaluating at l = J; for
/// WPT they hold the closed-form ratio written with rho1 / rho2. `limit`
/// fields are the sigma^2 -> 0 values of the formula.
struct RatioReport {
  Mode mode = Mode::wit;
  int optimal_index = 1;
  int middle_index = 1;

  double vs_middle = 0.0;
  double vs_middle_formula = 0.0;
  double vs_middle_limit = 0.0;

  double vs_all_pirs = 0.0;
  double vs_all_pirs_formula = 0.0;
  double vs_all_pirs_limit = 0.0;

  std::optional<double> rho1;
  std::optional<double> rho2;
};

[[nodiscard]] RatioReport ratio_diagnostics(const CascadeModel& m, Mode mode);

}  // namespace airs
