#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "airs/params.hpp"

namespace airs {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// One LoS hop from node k to node k+1 (node 0 is the BS, node J+1 the user).
/// Angles in radians. Hop 0 only uses `depart_azimuth` on the BS side; the
/// last hop ignores the arrival angles (single-antenna user).
struct HopGeometry {
  double distance = 1.0;
  double depart_azimuth = 0.0;
  double depart_elevation = 0.0;
  double arrive_azimuth = 0.0;
  double arrive_elevation = 0.0;
};

/// J + 1 hops for J surfaces.
struct CascadeGeometry {
  std::vector<HopGeometry> hops;

  [[nodiscard]] int num_irs() const { return static_cast<int>(hops.size()) - 1; }
};

/// Zig-zag placement with alternating heading and tilt so that no steering
/// argument collapses to zero. Distances come from `p`.
[[nodiscard]] CascadeGeometry zigzag_geometry(const SystemParams& p);

/// Uniformly random departure/arrival angles; distances come from `p`.
[[nodiscard]] CascadeGeometry random_geometry(const SystemParams& p, std::mt19937_64& rng);

/// Per-surface reflection phases (index 0 is surface 1) and the common
/// amplification factor of the active surface.
struct PhaseConfig {
  std::vector<std::vector<double>> theta;
  double eta = 0.0;
};

/// u(s, n)_m = exp(-j pi m s), m = 0..n-1. Throws on n < 1.
[[nodiscard]] ComplexVector steering_vector(double varsigma, int count);

/// u((2d/lambda) cos(az) sin(el), nx) (x) u((2d/lambda) cos(el), nz).
[[nodiscard]] ComplexVector upa_response(double azimuth, double elevation, ArrayShape shape, double spacing,
                                         double wavelength);

/// BS transmit response u((2d/lambda) cos(az), count).
[[nodiscard]] ComplexVector ula_response(double azimuth, int count, double spacing, double wavelength);

/// exp(log_scale) * unit. Keeps cascaded products representable when the
/// per-hop gains multiply down towards the double range limit.
struct ScaledVector {
  ComplexVector unit;
  double log_scale = 0.0;

  [[nodiscard]] ComplexVector value() const { return std::exp(log_scale) * unit; }
  [[nodiscard]] double log_squared_norm() const;
  /// Rescales `unit` to unit norm, folding the factor into `log_scale`.
  void normalize();
};

/// exp(log_gain) * unit, with `unit` the rank-one product of the phase term
/// and the two array responses (every entry unit modulus).
struct HopChannel {
  ComplexMatrix unit;
  double log_gain = 0.0;

  [[nodiscard]] ComplexMatrix value() const { return std::exp(log_gain) * unit; }
};

/// sqrt(beta0)/d^(alpha/2) * exp(-j 2 pi d / lambda) * rx * tx^H.
[[nodiscard]] HopChannel los_channel(double distance, double ref_gain, double exponent, double wavelength,
                                     const ComplexVector& rx, const ComplexVector& tx);

/// h_TA: BS -> active surface; h_AR^H: active surface -> user, stored as the
/// entries of the row vector.
struct EffectiveChannels {
  ScaledVector to_active;
  ScaledVector active_to_user;
};

/// Explicit matrix model of the whole cascade for a given active-surface index.
class CascadeLink {
 public:
  /// Throws std::invalid_argument when `active_index` is outside [1, J] or the
  /// geometry does not have J + 1 hops.
  CascadeLink(const SystemParams& params, const CascadeGeometry& geometry, int active_index);

  [[nodiscard]] int num_irs() const { return num_irs_; }
  [[nodiscard]] int active_index() const { return active_index_; }
  [[nodiscard]] const SystemParams& params() const { return params_; }

  /// Element count of surface k (1-based).
  [[nodiscard]] int element_count(int k) const;

  /// Hop k connects node k to node k+1: H_{0,1}, S_{k,k+1}, g^H_{J,J+1}.
  [[nodiscard]] const HopChannel& hop(int k) const { return hops_.at(k); }

  [[nodiscard]] const ComplexVector& bs_response() const { return bs_tx_; }
  /// Receive response of surface k towards node k-1.
  [[nodiscard]] const ComplexVector& rx_response(int k) const { return irs_rx_.at(k - 1); }
  /// Transmit response of surface k towards node k+1.
  [[nodiscard]] const ComplexVector& tx_response(int k) const { return irs_tx_.at(k - 1); }

 private:
  SystemParams params_;
  int num_irs_;
  int active_index_;
  ComplexVector bs_tx_;
  std::vector<ComplexVector> irs_rx_;
  std::vector<ComplexVector> irs_tx_;
  std::vector<HopChannel> hops_;
};

/// Left-to-right cascade products for h_TA and h_AR^H.
[[nodiscard]] EffectiveChannels effective_channels(const CascadeLink& link, const PhaseConfig& phases,
                                                   const ComplexVector& w);

/// eta^2 |h_AR^H Phi_l h_TA|^2 / (eta^2 ||h_AR^H Phi_l||^2 sigma^2 + sigma^2).
[[nodiscard]] double full_snr(const CascadeLink& link, const PhaseConfig& phases, const ComplexVector& w);

/// eta^2 (|h_AR^H Phi_l h_TA|^2 + sigma^2 ||h_AR^H||^2), in watts.
[[nodiscard]] double full_power(const CascadeLink& link, const PhaseConfig& phases, const ComplexVector& w);

/// diag(exp(j theta)) as a vector.
[[nodiscard]] ComplexVector reflection_vector(const std::vector<double>& theta);

}  // namespace airs
