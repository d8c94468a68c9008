#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "airs/params.hpp"

using namespace airs;
using doctest::Approx;

TEST_CASE("dB conversions") {
  CHECK(dbm_to_watts(30.0) == Approx(1.0).epsilon(1e-15));
  CHECK(db_to_linear(0.0) == 1.0);
  CHECK(db_to_linear(-43.0) == Approx(5.0119e-5).epsilon(1e-4));
  CHECK(db_to_linear(-43.0) == Approx(5.011872336272722e-05).epsilon(1e-12));
  CHECK(dbm_to_watts(-10.0) == Approx(1e-4).epsilon(1e-14));
  CHECK(dbm_to_watts(-60.0) == Approx(1e-9).epsilon(1e-14));
}

TEST_CASE("watts -> dBm -> watts round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> exponent(-15.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const double w = std::pow(10.0, exponent(rng));
    CHECK(dbm_to_watts(watts_to_dbm(w)) == Approx(w).epsilon(1e-12));
  }
}

TEST_CASE("square-ish factorisation") {
  CHECK(ArrayShape::square_ish(100).nx == 10);
  CHECK(ArrayShape::square_ish(150).count() == 150);
  CHECK(ArrayShape::square_ish(150).nx == 10);
  CHECK(ArrayShape::square_ish(7).nx == 1);
  CHECK(ArrayShape::square_ish(1).count() == 1);
  CHECK_THROWS_AS((void)ArrayShape::square_ish(0), std::invalid_argument);
}

TEST_CASE("link budget at the reference scenario") {
  const SystemParams p;
  const LinkBudget lb = derive_link_budget(p);
  CHECK(lb.kappa_inter == Approx(7.0795e-4).epsilon(1e-4));
  CHECK(lb.c_tx == Approx(3.1324e-5).epsilon(1e-4));
  CHECK(lb.c_active == Approx(4.6986303152556777e-08).epsilon(1e-12));
  CHECK(1.0 / lb.kappa_inter == Approx(1412.5375446227543).epsilon(1e-12));
  CHECK(lb.np_kappa_inter == Approx(100 * lb.kappa_inter));
  CHECK(lb.gain_decreasing());

  SystemParams big = p;
  big.passive = ArrayShape::square_ish(1412);
  CHECK(derive_link_budget(big).gain_decreasing());
  big.passive = ArrayShape::square_ish(1413);
  CHECK_FALSE(derive_link_budget(big).gain_decreasing());
}

TEST_CASE("unit reference distance gives unit amplitude") {
  SystemParams p;
  p.ref_gain = 1.0;
  p.dist_bs = 1.0;
  CHECK(derive_link_budget(p).kappa_bs == 1.0);
}

TEST_CASE("link budget scales linearly with beta0") {
  SystemParams p;
  const LinkBudget a = derive_link_budget(p);
  p.ref_gain *= 2.0;
  const LinkBudget b = derive_link_budget(p);
  CHECK(b.kappa_bs * b.kappa_bs == Approx(2.0 * a.kappa_bs * a.kappa_bs).epsilon(1e-14));
  CHECK(b.kappa_inter * b.kappa_inter == Approx(2.0 * a.kappa_inter * a.kappa_inter).epsilon(1e-14));
  CHECK(b.kappa_user * b.kappa_user == Approx(2.0 * a.kappa_user * a.kappa_user).epsilon(1e-14));
  CHECK(b.c_active == Approx(2.0 * a.c_active).epsilon(1e-14));
  CHECK(b.c_tx == Approx(2.0 * a.c_tx).epsilon(1e-14));
}

TEST_CASE("derive_link_budget rejects nonpositive inputs") {
  SystemParams p;
  p.dist_inter = 0.0;
  CHECK_THROWS_AS((void)derive_link_budget(p), std::invalid_argument);
  p = {};
  p.noise_power = -1.0;
  CHECK_THROWS_AS((void)derive_link_budget(p), std::invalid_argument);
  p = {};
  p.num_irs = 0;
  CHECK_THROWS_AS((void)derive_link_budget(p), std::invalid_argument);
}

namespace {
bool has_code(const std::vector<Diagnostic>& d, const std::string& code, Severity s) {
  return std::any_of(d.begin(), d.end(), [&](const Diagnostic& x) { return x.code == code && x.severity == s; });
}
}  // namespace

TEST_CASE("validate") {
  SUBCASE("reference scenario has no errors and no regime warning") {
    const auto d = validate(SystemParams{});
    CHECK_FALSE(has_errors(d));
    CHECK_FALSE(has_code(d, "gain_regime", Severity::warning));
    // 150-element active surface at 4 m sits inside 2 D^2 / lambda.
    for (const auto& x : d) CHECK(x.code == "far_field");
  }
  SUBCASE("relaxed far-field distance clears every diagnostic") {
    SystemParams p;
    p.fraunhofer_distance = 1.0;
    CHECK(validate(p).empty());
  }
  SUBCASE("J = 0 is one error") {
    SystemParams p;
    p.num_irs = 0;
    const auto d = validate(p);
    REQUIRE(d.size() == 1);
    CHECK(d[0].severity == Severity::error);
    CHECK(d[0].code == "num_irs");
  }
  SUBCASE("Np = 2000 flags the non-decreasing regime") {
    SystemParams p;
    p.passive = ArrayShape::square_ish(2000);
    const auto d = validate(p);
    CHECK_FALSE(has_errors(d));
    CHECK(has_code(d, "gain_regime", Severity::warning));
  }
  SUBCASE("negative power is an error, never a throw") {
    SystemParams p;
    p.amp_power = -1.0;
    CHECK(has_code(validate(p), "amp_power", Severity::error));
  }
}
