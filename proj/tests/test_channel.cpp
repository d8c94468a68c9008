#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/SVD>

#include "airs/beamforming.hpp"
#include "airs/channel.hpp"
#include "airs/metrics.hpp"

using namespace airs;
using doctest::Approx;
using std::numbers::pi;

namespace {

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) { return (a - b).cwiseAbs().maxCoeff(); }

SystemParams small_params() {
  SystemParams p;
  p.num_irs = 4;
  p.passive = {4, 4};
  p.active = {3, 5};
  return p;
}

}  // namespace

TEST_CASE("steering vector") {
  CHECK(max_abs_diff(steering_vector(0.0, 4), ComplexVector::Ones(4)) < 1e-15);

  ComplexVector half(2);
  half << 1.0, -1.0;
  CHECK(max_abs_diff(steering_vector(1.0, 2), half) < 1e-15);

  ComplexVector quarter(3);
  quarter << 1.0, Complex(0.0, -1.0), -1.0;
  CHECK(max_abs_diff(steering_vector(0.5, 3), quarter) < 1e-15);

  CHECK_THROWS_AS((void)steering_vector(0.3, 0), std::invalid_argument);

  const ComplexVector u = steering_vector(0.37, 9);
  for (Eigen::Index i = 0; i < u.size(); ++i) CHECK(std::abs(u[i]) == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("UPA response") {
  const double lambda = 0.1;
  const ComplexVector broadside = upa_response(pi / 2, pi / 2, {3, 4}, lambda / 2, lambda);
  CHECK(broadside.size() == 12);
  CHECK(max_abs_diff(broadside, ComplexVector::Ones(12)) < 1e-14);

  // az = 0, el = pi/2: x argument is 1, z argument is 0.
  ComplexVector expected(2);
  expected << 1.0, -1.0;
  CHECK(max_abs_diff(upa_response(0.0, pi / 2, {2, 1}, lambda / 2, lambda), expected) < 1e-14);

  // Kronecker ordering: x index is the slow one.
  const double az = 0.4;
  const double el = 1.1;
  const double xs = std::cos(az) * std::sin(el);
  const double zs = std::cos(el);
  const ComplexVector r = upa_response(az, el, {2, 3}, lambda / 2, lambda);
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 3; ++k) {
      const Complex expected_ik = std::polar(1.0, -pi * i * xs) * std::polar(1.0, -pi * k * zs);
      CHECK(std::abs(r[i * 3 + k] - expected_ik) < 1e-14);
    }
  }

  CHECK_THROWS_AS((void)upa_response(0.0, 0.0, {0, 3}, lambda / 2, lambda), std::invalid_argument);
}

TEST_CASE("LoS hop channel is rank one with the path-loss amplitude") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, pi);
  const double lambda = 0.0857;
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexVector rx = upa_response(angle(rng), angle(rng), {3, 4}, lambda / 2, lambda);
    const ComplexVector tx = upa_response(angle(rng), angle(rng), {2, 5}, lambda / 2, lambda);
    const ComplexMatrix h = los_channel(10.0, 5e-5, 2.0, lambda, rx, tx).value();
    CHECK(h.rows() == 12);
    CHECK(h.cols() == 10);
    const double kappa = std::sqrt(5e-5) / 10.0;
    for (Eigen::Index i = 0; i < h.size(); ++i) CHECK(std::abs(h(i)) == Approx(kappa).epsilon(1e-12));
    const Eigen::JacobiSVD<ComplexMatrix> svd(h);
    const auto& s = svd.singularValues();
    CHECK(s[0] == Approx(kappa * std::sqrt(12.0 * 10.0)).epsilon(1e-12));
    CHECK(s[1] < 1e-10 * s[0]);
  }

  const ComplexMatrix unit = los_channel(1.0, 1.0, 2.0, lambda, steering_vector(0.2, 3), steering_vector(0.4, 2)).value();
  for (Eigen::Index i = 0; i < unit.size(); ++i) CHECK(std::abs(unit(i)) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("single-antenna BS hop") {
  SystemParams p = small_params();
  p.bs_antennas = 1;
  const CascadeLink link(p, zigzag_geometry(p), 2);
  const ComplexMatrix h = link.hop(0).value();
  CHECK(h.rows() == 16);
  CHECK(h.cols() == 1);
  const double kappa_b = derive_link_budget(p).kappa_bs;
  for (Eigen::Index i = 0; i < h.size(); ++i) CHECK(std::abs(h(i)) == Approx(kappa_b).epsilon(1e-12));
}

TEST_CASE("cascade link dimensions follow the active index") {
  const SystemParams p = small_params();
  const CascadeLink link(p, zigzag_geometry(p), 3);
  CHECK(link.element_count(3) == 15);
  CHECK(link.element_count(1) == 16);
  CHECK(link.hop(0).unit.rows() == 16);
  CHECK(link.hop(2).unit.rows() == 15);  // S_{2,3}
  CHECK(link.hop(3).unit.cols() == 15);  // S_{3,4}
  CHECK(link.hop(4).unit.rows() == 1);   // g^H
  CHECK_THROWS_AS(CascadeLink(p, zigzag_geometry(p), 0), std::invalid_argument);
  CHECK_THROWS_AS(CascadeLink(p, zigzag_geometry(p), 5), std::invalid_argument);
}

TEST_CASE("effective channels: empty products at the ends") {
  const SystemParams p = small_params();
  const int J = p.num_irs;
  const CascadeGeometry g = zigzag_geometry(p);

  const CascadeLink first(p, g, 1);
  const Beamforming bf1 = optimal_beamforming(first);
  const EffectiveChannels ch1 = effective_channels(first, bf1.phases, bf1.beam);
  const ComplexVector direct = first.hop(0).value() * bf1.beam;
  CHECK(max_abs_diff(ch1.to_active.value(), direct) < 1e-12 * direct.norm());

  const CascadeLink last(p, g, J);
  const Beamforming bfJ = optimal_beamforming(last);
  const EffectiveChannels chJ = effective_channels(last, bfJ.phases, bfJ.beam);
  const ComplexVector g_row = last.hop(J).value().row(0).transpose();
  CHECK(max_abs_diff(chJ.active_to_user.value(), g_row) < 1e-12 * g_row.norm());
}

TEST_CASE("effective channel into the active surface matches the closed form") {
  SystemParams p = small_params();
  p.num_irs = 7;
  const LinkBudget lb = derive_link_budget(p);
  const CascadeGeometry g = zigzag_geometry(p);
  for (int l = 1; l <= p.num_irs; ++l) {
    const CascadeLink link(p, g, l);
    const Beamforming bf = optimal_beamforming(link);
    const ScaledVector ta = effective_channels(link, bf.phases, bf.beam).to_active;
    const double expected = p.na() * lb.kappa_bs * lb.kappa_bs * std::pow(lb.kappa_inter, 2 * (l - 1)) *
                            p.tx_power * p.bs_antennas * std::pow(p.np(), 2 * (l - 1));
    CHECK(std::exp(ta.log_squared_norm()) == Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("full SNR and power: degenerate cases") {
  const SystemParams p = small_params();
  const CascadeLink link(p, zigzag_geometry(p), 2);
  Beamforming bf = optimal_beamforming(link);

  SUBCASE("eta = 0 gives zero SNR") {
    bf.phases.eta = 0.0;
    CHECK(full_snr(link, bf.phases, bf.beam) == 0.0);
  }
  SUBCASE("no noise: power is the signal term only") {
    SystemParams quiet = p;
    quiet.noise_power = 0.0;
    const CascadeLink q(quiet, zigzag_geometry(quiet), 2);
    const EffectiveChannels ch = effective_channels(q, bf.phases, bf.beam);
    const ComplexVector phi = reflection_vector(bf.phases.theta[1]);
    const Complex z = ch.active_to_user.value().cwiseProduct(phi).transpose() * ch.to_active.value();
    const double expected = bf.phases.eta * bf.phases.eta * std::norm(z);
    CHECK(full_power(q, bf.phases, bf.beam) == Approx(expected).epsilon(1e-12));
  }
  SUBCASE("phase config must cover every surface") {
    PhaseConfig short_cfg = bf.phases;
    short_cfg.theta.pop_back();
    CHECK_THROWS_AS((void)full_snr(link, short_cfg, bf.beam), std::invalid_argument);
  }
}

TEST_CASE("more transmit power, higher SNR") {
  SystemParams p = small_params();
  const CascadeGeometry g = zigzag_geometry(p);
  const CascadeLink a(p, g, 3);
  const Beamforming bfa = optimal_beamforming(a);
  p.tx_power *= 4.0;
  const CascadeLink b(p, g, 3);
  const Beamforming bfb = optimal_beamforming(b);
  CHECK(full_snr(b, bfb.phases, bfb.beam) > full_snr(a, bfa.phases, bfa.beam));
}

TEST_CASE("matrix objectives do not depend on hop angles") {
  SystemParams p = small_params();
  p.num_irs = 5;
  std::mt19937_64 rng(2024);
  for (int l = 1; l <= p.num_irs; ++l) {
    const CascadeLink ref(p, zigzag_geometry(p), l);
    const Beamforming bf = optimal_beamforming(ref);
    const double snr0 = full_snr(ref, bf.phases, bf.beam);
    const double pow0 = full_power(ref, bf.phases, bf.beam);
    for (int trial = 0; trial < 5; ++trial) {
      const CascadeLink link(p, random_geometry(p, rng), l);
      const Beamforming b = optimal_beamforming(link);
      CHECK(full_snr(link, b.phases, b.beam) == Approx(snr0).epsilon(1e-8));
      CHECK(full_power(link, b.phases, b.beam) == Approx(pow0).epsilon(1e-8));
    }
  }
}

TEST_CASE("received power at the last surface beats the first") {
  const SystemParams p;  // Np = 100, J = 7
  const CascadeGeometry g = zigzag_geometry(p);
  const CascadeLink first(p, g, 1);
  const CascadeLink last(p, g, p.num_irs);
  const Beamforming b1 = optimal_beamforming(first);
  const Beamforming bJ = optimal_beamforming(last);
  CHECK(full_power(last, bJ.phases, bJ.beam) > full_power(first, b1.phases, b1.beam));
}
