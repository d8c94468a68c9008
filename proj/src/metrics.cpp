#include "airs/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace airs {

std::string to_string(Mode m) { return m == Mode::wit ? "wit" : "wpt"; }

Mode parse_mode(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "wit") return Mode::wit;
  if (lower == "wpt") return Mode::wpt;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "' (expected wit or wpt)");
}

CascadeModel CascadeModel::from(const SystemParams& p) {
  CascadeModel m;
  m.budget = derive_link_budget(p);
  m.num_irs = p.num_irs;
  m.np = p.np();
  m.na = p.na();
  m.bs_antennas = p.bs_antennas;
  m.tx_power = p.tx_power;
  m.amp_power = p.amp_power;
  m.noise_power = p.noise_power;
  return m;
}

double ObjectiveValue::db() const {
  return mode == Mode::wit ? linear_to_db(value) : watts_to_dbm(value);
}

double log_sum_exp(std::initializer_list<double> terms) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double t : terms) hi = std::max(hi, t);
  if (std::isinf(hi)) return hi;
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - hi);
  return hi + std::log(acc);
}

namespace {

void check_index(const CascadeModel& m, int l) {
  if (l < 1 || l > m.num_irs) {
    throw std::out_of_range("active index " + std::to_string(l) + " outside [1, " + std::to_string(m.num_irs) +
                            "]");
  }
}

// Logs of the recurring factors: C_a, C_t, Na, sigma^2 and Np kappa_I.
struct LogTerms {
  double ca, ct, na, s2, x;
};

LogTerms log_terms(const CascadeModel& m) {
  return {std::log(m.budget.c_active), std::log(m.budget.c_tx), std::log(static_cast<double>(m.na)),
          std::log(m.noise_power), std::log(m.budget.np_kappa_inter)};
}

}  // namespace

double effective_gain(const CascadeModel& m, int l) {
  check_index(m, l);
  const LogTerms t = log_terms(m);
  return std::exp(2.0 * std::log(m.budget.kappa_bs) + 2.0 * (l - 1) * t.x);
}

double log_snr_closed(const CascadeModel& m, int l) {
  check_index(m, l);
  const LogTerms t = log_terms(m);
  const int J = m.num_irs;
  const double numerator = t.ca + t.ct + t.na + 2.0 * (J - 1) * t.x;
  const double denominator = log_sum_exp({t.s2 + t.ca + 2.0 * (J - l) * t.x,
                                          t.s2 + t.ct + 2.0 * (l - 1) * t.x,
                                          2.0 * t.s2});
  return numerator - denominator;
}

double snr_closed(const CascadeModel& m, int l) { return std::exp(log_snr_closed(m, l)); }

double log_snr_penalty(const CascadeModel& m, int l) {
  check_index(m, l);
  const LogTerms t = log_terms(m);
  const int J = m.num_irs;
  return log_sum_exp({t.ca + 2.0 * (J - l) * t.x, t.ct + 2.0 * (l - 1) * t.x});
}

double log_rank_key(const CascadeModel& m, int l, Mode mode) {
  return mode == Mode::wit ? -log_snr_penalty(m, l) : log_power_closed(m, l);
}

double log_power_closed(const CascadeModel& m, int l) {
  check_index(m, l);
  const LogTerms t = log_terms(m);
  const int J = m.num_irs;
  const double numerator = log_sum_exp({t.ca + t.ct + t.na + 2.0 * (J - 1) * t.x,
                                        t.s2 + t.ca + 2.0 * (J - l) * t.x});
  const double denominator = log_sum_exp({t.ct + 2.0 * (l - 1) * t.x, t.s2});
  return numerator - denominator;
}

double power_closed(const CascadeModel& m, int l) { return std::exp(log_power_closed(m, l)); }

double log_objective(const CascadeModel& m, int l, Mode mode) {
  return mode == Mode::wit ? log_snr_closed(m, l) : log_power_closed(m, l);
}

ObjectiveValue objective(const CascadeModel& m, int l, Mode mode) {
  return {std::exp(log_objective(m, l, mode)), l, mode};
}

int snr_scaling_order(int l, int num_irs) {
  // l < (J+1)/2  <=>  2l < J+1
  return (2 * l < num_irs + 1) ? 2 * (l - 1) : 2 * (num_irs - l);
}

int power_scaling_order(int l, int num_irs) { return 2 * (num_irs - l); }

}  // namespace airs
