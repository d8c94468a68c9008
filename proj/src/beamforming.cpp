#include "airs/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace airs {

ComplexVector optimal_transmit_beam(const ComplexVector& h_tilde, double tx_power) {
  const double n = h_tilde.norm();
  if (!(n > 0.0)) throw std::invalid_argument("transmit response must be nonzero");
  return std::sqrt(tx_power) / n * h_tilde;
}

std::vector<double> optimal_surface_phases(const ComplexVector& rx, const ComplexVector& tx) {
  if (rx.size() != tx.size()) throw std::invalid_argument("rx/tx responses must have equal length");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> theta(static_cast<std::size_t>(rx.size()));
  for (Eigen::Index n = 0; n < rx.size(); ++n) {
    double t = std::arg(tx[n] * std::conj(rx[n]));
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t = 0.0;
    theta[static_cast<std::size_t>(n)] = t;
  }
  return theta;
}

Complex reflection_gain(const ComplexVector& rx, const ComplexVector& tx, const std::vector<double>& theta) {
  if (rx.size() != tx.size() || static_cast<std::size_t>(rx.size()) != theta.size()) {
    throw std::invalid_argument("reflection gain operands must have equal length");
  }
  return tx.adjoint() * reflection_vector(theta).cwiseProduct(rx);
}

double amplification_factor(int active_index, const LinkBudget& lb, double noise_power, double amp_power) {
  if (active_index < 1) throw std::invalid_argument("active index must be >= 1");
  const double log_incident =
      std::log(lb.c_tx) + 2.0 * (active_index - 1) * std::log(lb.np_kappa_inter);
  return amplification_from_incident(std::exp(log_incident), noise_power, amp_power);
}

double amplification_from_incident(double incident_power, double noise_power, double amp_power) {
  return std::sqrt(amp_power / (incident_power + noise_power));
}

PowerCheck check_power_constraint(double eta, double incident_power, double noise_power, double amp_power) {
  const double reflected = eta * eta * (incident_power + noise_power);
  return {reflected <= amp_power * (1.0 + 1e-12), amp_power - reflected};
}

double incident_power(const CascadeLink& link, const PhaseConfig& phases, const ComplexVector& w) {
  const ScaledVector ta = effective_channels(link, phases, w).to_active;
  return ta.unit.cwiseAbs2().maxCoeff() * std::exp(2.0 * ta.log_scale);
}

Beamforming optimal_beamforming(const CascadeLink& link) {
  Beamforming out;
  out.beam = optimal_transmit_beam(link.bs_response(), link.params().tx_power);
  for (int k = 1; k <= link.num_irs(); ++k) {
    out.phases.theta.push_back(optimal_surface_phases(link.rx_response(k), link.tx_response(k)));
  }
  // Non-optimal phases can spread incident power unevenly; the maximum keeps
  // every element within budget.
  const SystemParams& p = link.params();
  out.phases.eta = amplification_from_incident(incident_power(link, out.phases, out.beam), p.noise_power,
                                               p.amp_power);
  return out;
}

}  // namespace airs
