#include "airs/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace airs {

ArrayShape ArrayShape::square_ish(int n) {
  if (n < 1) throw std::invalid_argument("array element count must be positive");
  int nx = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (nx > 1 && n % nx != 0) --nx;
  return {nx, n / nx};
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double path_amplitude(double ref_gain, double exponent, double distance) {
  return std::sqrt(ref_gain) / std::pow(distance, exponent / 2.0);
}

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
  }
}

double upa_aperture(ArrayShape a, double spacing) {
  const double x = (a.nx - 1) * spacing;
  const double z = (a.nz - 1) * spacing;
  return std::hypot(x, z);
}

}  // namespace

LinkBudget derive_link_budget(const SystemParams& p) {
  if (p.num_irs < 1) throw std::invalid_argument("num_irs must be >= 1");
  if (p.bs_antennas < 1) throw std::invalid_argument("bs_antennas must be >= 1");
  if (p.active.nx < 1 || p.active.nz < 1) throw std::invalid_argument("active array dims must be >= 1");
  if (p.passive.nx < 1 || p.passive.nz < 1) throw std::invalid_argument("passive array dims must be >= 1");
  require_positive(p.dist_bs, "dist_bs");
  require_positive(p.dist_user, "dist_user");
  require_positive(p.dist_inter, "dist_inter");
  require_positive(p.tx_power, "tx_power");
  require_positive(p.amp_power, "amp_power");
  require_positive(p.noise_power, "noise_power");
  require_positive(p.pathloss_exponent, "pathloss_exponent");
  require_positive(p.ref_gain, "ref_gain");

  LinkBudget lb;
  lb.kappa_bs = path_amplitude(p.ref_gain, p.pathloss_exponent, p.dist_bs);
  lb.kappa_inter = path_amplitude(p.ref_gain, p.pathloss_exponent, p.dist_inter);
  lb.kappa_user = path_amplitude(p.ref_gain, p.pathloss_exponent, p.dist_user);
  lb.c_active = p.amp_power * p.na() * lb.kappa_user * lb.kappa_user;
  lb.c_tx = p.tx_power * p.bs_antennas * lb.kappa_bs * lb.kappa_bs;
  lb.np_kappa_inter = p.np() * lb.kappa_inter;
  return lb;
}

std::vector<Diagnostic> validate(const SystemParams& p) {
  std::vector<Diagnostic> out;
  auto error = [&](std::string code, std::string msg) {
    out.push_back({Severity::error, std::move(code), std::move(msg)});
  };
  auto check_positive = [&](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) error(name, std::string(name) + " must be positive and finite");
  };

  if (p.num_irs < 1) error("num_irs", "J must be at least 1");
  if (p.bs_antennas < 1) error("bs_antennas", "M must be at least 1");
  if (p.active.nx < 1 || p.active.nz < 1) error("active", "active array dimensions must be >= 1");
  if (p.passive.nx < 1 || p.passive.nz < 1) error("passive", "passive array dimensions must be >= 1");
  check_positive(p.dist_bs, "dist_bs");
  check_positive(p.dist_user, "dist_user");
  check_positive(p.dist_inter, "dist_inter");
  check_positive(p.tx_power, "tx_power");
  check_positive(p.amp_power, "amp_power");
  check_positive(p.noise_power, "noise_power");
  check_positive(p.pathloss_exponent, "pathloss_exponent");
  check_positive(p.ref_gain, "ref_gain");
  check_positive(p.wavelength, "wavelength");
  check_positive(p.bs_element_spacing(), "bs_spacing");
  check_positive(p.irs_element_spacing(), "irs_spacing");
  if (has_errors(out)) return out;

  const double d_irs = std::max(upa_aperture(p.active, p.irs_element_spacing()),
                                upa_aperture(p.passive, p.irs_element_spacing()));
  const double d_bs = (p.bs_antennas - 1) * p.bs_element_spacing();
  auto far_field = [&](double aperture) {
    return p.fraunhofer_distance.value_or(2.0 * aperture * aperture / p.wavelength);
  };
  const struct {
    const char* name;
    double distance;
    double limit;
  } hops[] = {
      {"dist_bs", p.dist_bs, far_field(std::max(d_bs, d_irs))},
      {"dist_inter", p.dist_inter, far_field(d_irs)},
      {"dist_user", p.dist_user, far_field(d_irs)},
  };
  for (const auto& h : hops) {
    if (p.num_irs == 1 && std::string(h.name) == "dist_inter") continue;
    if (h.distance <= h.limit) {
      std::ostringstream msg;
      msg << h.name << " = " << h.distance << " m is inside the far-field distance " << h.limit << " m";
      out.push_back({Severity::warning, "far_field", msg.str()});
    }
  }

  const LinkBudget lb = derive_link_budget(p);
  if (!lb.gain_decreasing()) {
    std::ostringstream msg;
    msg << "f(l) non-decreasing regime: Np * kappa_I = " << lb.np_kappa_inter
        << " >= 1 (Np must stay below " << 1.0 / lb.kappa_inter << ")";
    out.push_back({Severity::warning, "gain_regime", msg.str()});
  }
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.severity == Severity::error; });
}

std::string to_string(Severity s) { return s == Severity::error ? "error" : "warning"; }

}  // namespace airs
