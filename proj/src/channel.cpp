#include "airs/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace airs {

namespace {

using std::numbers::pi;

struct Direction {
  double azimuth;
  double elevation;
};

Direction direction_angles(double ux, double uy, double uz) {
  return {std::atan2(uy, ux), std::acos(std::clamp(uz, -1.0, 1.0))};
}

HopGeometry hop_from_direction(double distance, double ux, double uy, double uz) {
  const Direction out = direction_angles(ux, uy, uz);
  const Direction back = direction_angles(-ux, -uy, -uz);
  return {distance, out.azimuth, out.elevation, back.azimuth, back.elevation};
}

double hop_distance(const SystemParams& p, int k) {
  if (k == 0) return p.dist_bs;
  if (k == p.num_irs) return p.dist_user;
  return p.dist_inter;
}

}  // namespace

CascadeGeometry zigzag_geometry(const SystemParams& p) {
  if (p.num_irs < 1) throw std::invalid_argument("num_irs must be >= 1");
  CascadeGeometry g;
  for (int k = 0; k <= p.num_irs; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double heading = sign * pi / 5.0 + 0.05 * k;
    const double tilt = sign * 0.15;
    g.hops.push_back(hop_from_direction(hop_distance(p, k), std::cos(tilt) * std::cos(heading),
                                        std::cos(tilt) * std::sin(heading), std::sin(tilt)));
  }
  return g;
}

CascadeGeometry random_geometry(const SystemParams& p, std::mt19937_64& rng) {
  if (p.num_irs < 1) throw std::invalid_argument("num_irs must be >= 1");
  std::uniform_real_distribution<double> azimuth(0.0, 2.0 * pi);
  std::uniform_real_distribution<double> elevation(0.0, pi);
  CascadeGeometry g;
  for (int k = 0; k <= p.num_irs; ++k) {
    HopGeometry h;
    h.distance = hop_distance(p, k);
    h.depart_azimuth = azimuth(rng);
    h.depart_elevation = elevation(rng);
    h.arrive_azimuth = azimuth(rng);
    h.arrive_elevation = elevation(rng);
    g.hops.push_back(h);
  }
  return g;
}

ComplexVector steering_vector(double varsigma, int count) {
  if (count < 1) throw std::invalid_argument("steering vector length must be >= 1");
  ComplexVector u(count);
  for (int m = 0; m < count; ++m) u[m] = std::polar(1.0, -pi * m * varsigma);
  return u;
}

ComplexVector upa_response(double azimuth, double elevation, ArrayShape shape, double spacing,
                           double wavelength) {
  if (shape.nx < 1 || shape.nz < 1) throw std::invalid_argument("UPA dimensions must be >= 1");
  const double scale = 2.0 * spacing / wavelength;
  const ComplexVector ux = steering_vector(scale * std::cos(azimuth) * std::sin(elevation), shape.nx);
  const ComplexVector uz = steering_vector(scale * std::cos(elevation), shape.nz);
  ComplexVector out(shape.count());
  for (int i = 0; i < shape.nx; ++i) out.segment(i * shape.nz, shape.nz) = ux[i] * uz;
  return out;
}

ComplexVector ula_response(double azimuth, int count, double spacing, double wavelength) {
  return steering_vector(2.0 * spacing / wavelength * std::cos(azimuth), count);
}

double ScaledVector::log_squared_norm() const { return std::log(unit.squaredNorm()) + 2.0 * log_scale; }

void ScaledVector::normalize() {
  const double n = unit.norm();
  if (n > 0.0 && std::isfinite(n)) {
    unit /= n;
    log_scale += std::log(n);
  }
}

HopChannel los_channel(double distance, double ref_gain, double exponent, double wavelength,
                       const ComplexVector& rx, const ComplexVector& tx) {
  if (!(distance > 0.0)) throw std::invalid_argument("hop distance must be positive");
  if (rx.size() == 0 || tx.size() == 0) throw std::invalid_argument("array responses must be non-empty");
  const Complex phase = std::polar(1.0, -2.0 * pi * distance / wavelength);
  return {phase * rx * tx.adjoint(), std::log(path_amplitude(ref_gain, exponent, distance))};
}

CascadeLink::CascadeLink(const SystemParams& params, const CascadeGeometry& geometry, int active_index)
    : params_(params), num_irs_(params.num_irs), active_index_(active_index) {
  if (num_irs_ < 1) throw std::invalid_argument("num_irs must be >= 1");
  if (active_index < 1 || active_index > num_irs_) {
    throw std::invalid_argument("active index " + std::to_string(active_index) + " outside [1, " +
                                std::to_string(num_irs_) + "]");
  }
  if (geometry.num_irs() != num_irs_) throw std::invalid_argument("geometry must have J + 1 hops");

  const double lambda = params.wavelength;
  const double d_irs = params.irs_element_spacing();
  const auto& hops = geometry.hops;

  bs_tx_ = ula_response(hops[0].depart_azimuth, params.bs_antennas, params.bs_element_spacing(), lambda);
  for (int k = 1; k <= num_irs_; ++k) {
    const ArrayShape shape = (k == active_index) ? params.active : params.passive;
    const HopGeometry& in = hops[k - 1];
    const HopGeometry& out = hops[k];
    irs_rx_.push_back(upa_response(in.arrive_azimuth, in.arrive_elevation, shape, d_irs, lambda));
    irs_tx_.push_back(upa_response(out.depart_azimuth, out.depart_elevation, shape, d_irs, lambda));
  }

  const double beta0 = params.ref_gain;
  const double alpha = params.pathloss_exponent;
  hops_.push_back(los_channel(hops[0].distance, beta0, alpha, lambda, irs_rx_[0], bs_tx_));
  for (int k = 1; k < num_irs_; ++k) {
    hops_.push_back(los_channel(hops[k].distance, beta0, alpha, lambda, irs_rx_[k], irs_tx_[k - 1]));
  }
  const ComplexVector user = ComplexVector::Ones(1);
  hops_.push_back(los_channel(hops[num_irs_].distance, beta0, alpha, lambda, user, irs_tx_.back()));
}

int CascadeLink::element_count(int k) const {
  if (k < 1 || k > num_irs_) throw std::out_of_range("surface index out of range");
  return static_cast<int>(irs_rx_[k - 1].size());
}

ComplexVector reflection_vector(const std::vector<double>& theta) {
  ComplexVector v(static_cast<Eigen::Index>(theta.size()));
  for (std::size_t n = 0; n < theta.size(); ++n) v[static_cast<Eigen::Index>(n)] = std::polar(1.0, theta[n]);
  return v;
}

namespace {

void check_phases(const CascadeLink& link, const PhaseConfig& phases) {
  if (static_cast<int>(phases.theta.size()) != link.num_irs()) {
    throw std::invalid_argument("phase config must cover every surface");
  }
  for (int k = 1; k <= link.num_irs(); ++k) {
    if (static_cast<int>(phases.theta[k - 1].size()) != link.element_count(k)) {
      throw std::invalid_argument("phase count mismatch at surface " + std::to_string(k));
    }
  }
}

struct CascadeTerms {
  double log_signal;       // log |h_AR^H Phi_l h_TA|^2
  double log_noise_gain;   // log ||h_AR^H Phi_l||^2
  double log_user_gain;    // log ||h_AR^H||^2
};

CascadeTerms cascade_terms(const CascadeLink& link, const PhaseConfig& phases, const ComplexVector& w) {
  const EffectiveChannels ch = effective_channels(link, phases, w);
  const ComplexVector phi = reflection_vector(phases.theta[link.active_index() - 1]);
  const ComplexVector row = ch.active_to_user.unit.cwiseProduct(phi);
  const Complex z = row.transpose() * ch.to_active.unit;
  return {std::log(std::norm(z)) + 2.0 * (ch.to_active.log_scale + ch.active_to_user.log_scale),
          std::log(row.squaredNorm()) + 2.0 * ch.active_to_user.log_scale,
          ch.active_to_user.log_squared_norm()};
}

}  // namespace

EffectiveChannels effective_channels(const CascadeLink& link, const PhaseConfig& phases, const ComplexVector& w) {
  check_phases(link, phases);
  if (w.size() != link.params().bs_antennas) throw std::invalid_argument("beamformer length must equal M");
  const int l = link.active_index();
  const int J = link.num_irs();

  ScaledVector ta{link.hop(0).unit * w, link.hop(0).log_gain};
  ta.normalize();
  for (int k = 1; k < l; ++k) {
    const ComplexVector reflected = reflection_vector(phases.theta[k - 1]).cwiseProduct(ta.unit);
    ta.unit = link.hop(k).unit * reflected;
    ta.log_scale += link.hop(k).log_gain;
    ta.normalize();
  }

  ScaledVector ar{link.hop(J).unit.row(0).transpose(), link.hop(J).log_gain};
  ar.normalize();
  for (int k = J - 1; k >= l; --k) {
    const ComplexVector reflected = reflection_vector(phases.theta[k]).cwiseProduct(ar.unit);
    ar.unit = link.hop(k).unit.transpose() * reflected;
    ar.log_scale += link.hop(k).log_gain;
    ar.normalize();
  }
  return {std::move(ta), std::move(ar)};
}

double full_snr(const CascadeLink& link, const PhaseConfig& phases, const ComplexVector& w) {
  const CascadeTerms t = cascade_terms(link, phases, w);
  const double eta2 = phases.eta * phases.eta;
  const double sigma2 = link.params().noise_power;
  return eta2 * std::exp(t.log_signal) / (sigma2 * (eta2 * std::exp(t.log_noise_gain) + 1.0));
}

double full_power(const CascadeLink& link, const PhaseConfig& phases, const ComplexVector& w) {
  const CascadeTerms t = cascade_terms(link, phases, w);
  const double eta2 = phases.eta * phases.eta;
  return eta2 * (std::exp(t.log_signal) + link.params().noise_power * std::exp(t.log_user_gain));
}

}  // namespace airs
