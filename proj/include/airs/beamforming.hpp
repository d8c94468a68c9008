#pragma once

#include <vector>

#include "airs/channel.hpp"
#include "airs/params.hpp"

namespace airs {

/// Maximum-ratio transmit beam sqrt(P_t) h / ||h||. Throws on a zero vector.
[[nodiscard]] ComplexVector optimal_transmit_beam(const ComplexVector& h_tilde, double tx_power);

/// Phases in [0, 2pi) that co-phase every term of tx^H diag(e^{j theta}) rx onto
/// the positive real axis, so the reflection gain equals the element count.
/// Throws on length mismatch.
[[nodiscard]] std::vector<double> optimal_surface_phases(const ComplexVector& rx, const ComplexVector& tx);

/// A_k = tx^H diag(e^{j theta}) rx.
[[nodiscard]] Complex reflection_gain(const ComplexVector& rx, const ComplexVector& tx,
                                      const std::vector<double>& theta);

/// eta for the per-element budget, given the closed-form incident power
/// C_t (Np kappa_I)^{2(l-1)} of an optimally beamformed cascade.
[[nodiscard]] double amplification_factor(int active_index, const LinkBudget& lb, double noise_power,
                                          double amp_power);

/// eta = sqrt(P_a / (incident + sigma^2)).
[[nodiscard]] double amplification_from_incident(double incident_power, double noise_power, double amp_power);

struct PowerCheck {
  bool feasible = false;
  double slack = 0.0;  // P_a - eta^2 (incident + sigma^2), watts
};

/// Feasible iff eta^2 (incident + sigma^2) <= P_a up to 1e-12 relative.
[[nodiscard]] PowerCheck check_power_constraint(double eta, double incident_power, double noise_power,
                                                double amp_power);

/// Largest per-element power arriving at the active surface, max_n |[h_TA]_n|^2.
[[nodiscard]] double incident_power(const CascadeLink& link, const PhaseConfig& phases, const ComplexVector& w);

struct Beamforming {
  ComplexVector beam;
  PhaseConfig phases;
};

/// Transmit beam, co-phased surfaces and the boundary eta, all derived from
/// the explicit channel matrices of `link`.
[[nodiscard]] Beamforming optimal_beamforming(const CascadeLink& link);

}  // namespace airs
