#include "airs/deployment.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace airs {

std::string to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::case_i: return "I";
    case CaseLabel::case_ii: return "II";
    case CaseLabel::case_iii: return "III";
    case CaseLabel::brute_force_fallback: return "brute-force-fallback";
    case CaseLabel::final_irs: return "final";
  }
  return "?";
}

namespace {

// First index with the strictly largest objective; ties go to the smaller index.
int best_of(const CascadeModel& m, Mode mode, const std::vector<int>& candidates) {
  int best = candidates.front();
  double best_value = log_rank_key(m, best, mode);
  for (int l : candidates) {
    const double v = log_rank_key(m, l, mode);
    if (v > best_value || (v == best_value && l < best)) {
      best = l;
      best_value = v;
    }
  }
  return best;
}

std::vector<int> rounded_candidates(double relaxed, int num_irs) {
  const int lo = std::clamp(static_cast<int>(std::floor(relaxed)), 1, num_irs);
  const int hi = std::clamp(static_cast<int>(std::ceil(relaxed)), 1, num_irs);
  if (lo == hi) return {lo};
  return {lo, hi};
}

bool nearly_equal(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

DeploymentSolution finish(const CascadeModel& m, Mode mode, int index, CaseLabel label,
                          std::optional<double> relaxed) {
  const DeploymentSolution brute = brute_force_index(m, mode);
  DeploymentSolution s;
  s.index = index;
  s.objective = objective(m, index, mode);
  s.case_label = label;
  s.relaxed_index = relaxed;
  s.brute_force_index = brute.index;
  s.brute_force_agrees = brute.index == index;
  return s;
}

}  // namespace

DeploymentSolution brute_force_index(const CascadeModel& m, Mode mode) {
  std::vector<int> all(static_cast<std::size_t>(m.num_irs));
  for (int l = 1; l <= m.num_irs; ++l) all[static_cast<std::size_t>(l - 1)] = l;
  DeploymentSolution s;
  s.index = best_of(m, mode, all);
  s.objective = objective(m, s.index, mode);
  s.case_label = CaseLabel::brute_force_fallback;
  s.brute_force_index = s.index;
  s.brute_force_agrees = true;
  return s;
}

std::optional<double> relaxed_wit_index(const CascadeModel& m) {
  if (m.num_irs == 1 || !m.budget.gain_decreasing()) return std::nullopt;
  const double x = m.budget.np_kappa_inter;
  return (m.num_irs + 1) / 2.0 + std::log(m.budget.c_active / m.budget.c_tx) / (2.0 * std::log(x * x));
}

std::optional<double> wit_saturation_np(const CascadeModel& m) {
  const double ca = m.budget.c_active;
  const double ct = m.budget.c_tx;
  if (m.num_irs == 1 || nearly_equal(ca, ct)) return std::nullopt;
  const double ratio = std::min(ca, ct) / std::max(ca, ct);
  return std::pow(ratio, 1.0 / (2.0 * (m.num_irs - 1))) / m.budget.kappa_inter;
}

DeploymentSolution optimal_index_wit(const CascadeModel& m) {
  const int J = m.num_irs;
  const double ca = m.budget.c_active;
  const double ct = m.budget.c_tx;
  const CaseLabel label = nearly_equal(ca, ct) ? CaseLabel::case_ii
                          : (ca < ct)          ? CaseLabel::case_i
                                               : CaseLabel::case_iii;
  if (J == 1) return finish(m, Mode::wit, 1, label, std::nullopt);
  if (!m.budget.gain_decreasing()) {
    return finish(m, Mode::wit, brute_force_index(m, Mode::wit).index, CaseLabel::brute_force_fallback,
                  std::nullopt);
  }

  const double relaxed = *relaxed_wit_index(m);
  if (label == CaseLabel::case_ii) {
    return finish(m, Mode::wit, best_of(m, Mode::wit, rounded_candidates((J + 1) / 2.0, J)), label, relaxed);
  }
  const double threshold = *wit_saturation_np(m);
  if (static_cast<double>(m.np) >= threshold) {
    return finish(m, Mode::wit, label == CaseLabel::case_i ? J : 1, label, relaxed);
  }
  return finish(m, Mode::wit, best_of(m, Mode::wit, rounded_candidates(relaxed, J)), label, relaxed);
}

DeploymentSolution optimal_index_wpt(const CascadeModel& m) {
  if (!m.budget.gain_decreasing()) {
    return finish(m, Mode::wpt, brute_force_index(m, Mode::wpt).index, CaseLabel::brute_force_fallback,
                  std::nullopt);
  }
  return finish(m, Mode::wpt, m.num_irs, CaseLabel::final_irs, std::nullopt);
}

DeploymentSolution optimal_index(const CascadeModel& m, Mode mode) {
  return mode == Mode::wit ? optimal_index_wit(m) : optimal_index_wpt(m);
}

int middle_index(int num_irs) { return (num_irs + 1) / 2; }

ObjectiveValue scheme_middle(const CascadeModel& m, Mode mode) {
  return objective(m, middle_index(m.num_irs), mode);
}

double log_scheme_all_pirs(const CascadeModel& m, Mode mode) {
  const LinkBudget& lb = m.budget;
  const double boosted = m.tx_power + m.na * m.amp_power;
  const double log_power = std::log(boosted) + std::log(static_cast<double>(m.bs_antennas)) +
                           2.0 * std::log(lb.kappa_bs) + 2.0 * std::log(lb.kappa_user) +
                           2.0 * std::log(static_cast<double>(m.np)) +
                           2.0 * (m.num_irs - 1) * std::log(lb.np_kappa_inter);
  return mode == Mode::wit ? log_power - std::log(m.noise_power) : log_power;
}

ObjectiveValue scheme_all_pirs(const CascadeModel& m, Mode mode) {
  return {std::exp(log_scheme_all_pirs(m, mode)), 0, mode};
}

double wpt_crossover_np(const CascadeModel& m) {
  const double kb2 = m.budget.kappa_bs * m.budget.kappa_bs;
  const double na = m.na;
  const double J = m.num_irs;
  const double base = na * na * m.amp_power / ((m.tx_power + m.amp_power * na) * m.bs_antennas * kb2);
  return std::pow(base, 1.0 / (2.0 * J)) * std::pow(m.budget.kappa_inter, (1.0 - J) / J);
}

RatioReport ratio_diagnostics(const CascadeModel& m, Mode mode) {
  const DeploymentSolution best = optimal_index(m, mode);
  RatioReport r;
  r.mode = mode;
  r.optimal_index = best.index;
  r.middle_index = middle_index(m.num_irs);

  const double log_best = log_objective(m, best.index, mode);
  r.vs_middle = std::exp(log_best - log_objective(m, r.middle_index, mode));
  r.vs_all_pirs = std::exp(log_best - log_scheme_all_pirs(m, mode));

  const LinkBudget& lb = m.budget;
  const double ca = lb.c_active;
  const double ct = lb.c_tx;
  const double s2 = m.noise_power;
  const double na = m.na;
  const double np = m.np;
  const double p = std::exp((m.num_irs - 1) * std::log(lb.np_kappa_inter));  // (Np kappa_I)^{J-1}

  if (mode == Mode::wit) {
    r.vs_middle_formula = (ca + ct + s2 / p) / (ca / p + ct * p + s2 / p);
    r.vs_middle_limit = (ca + ct) / (ca / p + ct * p);
    const double scale = na * na * m.tx_power * m.amp_power / ((m.tx_power + na * m.amp_power) * np * np);
    r.vs_all_pirs_formula = scale / (ca + ct * p * p + s2);
    r.vs_all_pirs_limit = scale / (ca + ct * p * p);
  } else {
    const double rho1 = ct * s2 * p * (1.0 - p) * (1.0 - na) /
                        (ct * ct * na * p * p * p + ct * s2 * p * (na + p) + s2 * s2);
    r.rho1 = rho1;
    r.vs_middle_formula = (1.0 + rho1) / p;
    r.vs_middle_limit = 1.0 / p;

    const double rho2 = s2 * (1.0 - na) / (ct * na * p * p + na * s2);
    r.rho2 = rho2;
    const double kb2 = lb.kappa_bs * lb.kappa_bs;
    const double ku2 = lb.kappa_user * lb.kappa_user;
    r.vs_all_pirs_limit = ca * na / (np * np * p * p * (ct * ku2 + ca * m.bs_antennas * kb2));
    r.vs_all_pirs_formula = r.vs_all_pirs_limit * (1.0 + rho2);
  }
  return r;
}

}  // namespace airs
