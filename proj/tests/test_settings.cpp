#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "causalab/operators.hpp"
#include "causalab/settings.hpp"

using namespace causalab;
using Catch::Approx;

TEST_CASE("bundled single-basis settings validate", "[settings]") {
  for (int n = 1; n <= 7; ++n) {
    const MpSetting s = catalog_e1_setting(n);
    REQUIRE_NOTHROW(validate_setting(s));
    REQUIRE(s.alice.n_outcomes() == 2);
    REQUIRE(s.alice.n_preps() == 2);
    REQUIRE(s.bob.n_outcomes() == 2);
    REQUIRE(s.bob.n_preps() == 2);
    for (int j = 0; j < 2; ++j) {
      REQUIRE(s.alice.cond.row(j).sum() == Approx(1.0).margin(1e-12));
      REQUIRE(s.bob.cond.row(j).sum() == Approx(1.0).margin(1e-12));
    }
  }
  REQUIRE_THROWS_AS(catalog_e1_setting(0), std::invalid_argument);
  REQUIRE_THROWS_AS(catalog_e1_setting(8), std::invalid_argument);
}

TEST_CASE("setting 1 uses the computational and 45-degree axes", "[settings]") {
  const MpSetting s = catalog_e1_setting(1);
  REQUIRE(frobenius_distance(s.alice.effects[0], bloch_pure_state(0, 0)) < 1e-12);
  REQUIRE(frobenius_distance(s.alice.effects[1], bloch_pure_state(180, 0)) < 1e-12);
  REQUIRE(frobenius_distance(s.bob.effects[0], bloch_pure_state(45, 0)) < 1e-12);
  REQUIRE(frobenius_distance(s.alice.preps[0], bloch_pure_state(0, 0)) < 1e-12);
  REQUIRE(frobenius_distance(s.alice.preps[1], bloch_pure_state(45, 0)) < 1e-12);
  REQUIRE(frobenius_distance(s.bob.preps[1], bloch_pure_state(45, 0)) < 1e-12);
}

TEST_CASE("two-outcome POVMs complete to the identity", "[settings]") {
  for (int n = 1; n <= 7; ++n) {
    const MpSetting s = catalog_e1_setting(n);
    REQUIRE(frobenius_distance(s.alice.effects[0] + s.alice.effects[1],
                               identity(2)) < 1e-12);
    REQUIRE(frobenius_distance(s.bob.effects[0] + s.bob.effects[1],
                               identity(2)) < 1e-12);
  }
}

TEST_CASE("preparation rule weights the matching state at 0.65", "[settings]") {
  const Eigen::MatrixXd r = default_prep_rule();
  REQUIRE(r(0, 0) == Approx(0.65));
  REQUIRE(r(0, 1) == Approx(0.35));
  REQUIRE(r(1, 0) == Approx(0.35));
  REQUIRE(r(1, 1) == Approx(0.65));
}

TEST_CASE("published angle accessors agree with the built effects", "[settings]") {
  for (int n = 1; n <= 7; ++n) {
    const MpSetting s = catalog_e1_setting(n);
    const auto am = catalog_e1_alice_meas(n);
    REQUIRE(frobenius_distance(
                s.alice.effects[0],
                bloch_pure_state(am[0].theta_deg, am[0].phi_deg)) < 1e-12);
    REQUIRE(frobenius_distance(
                s.alice.effects[1],
                bloch_pure_state(am[1].theta_deg, am[1].phi_deg)) < 1e-12);
    const auto ap = catalog_e1_alice_preps(n);
    REQUIRE(frobenius_distance(
                s.alice.preps[1],
                bloch_pure_state(ap[1].theta_deg, ap[1].phi_deg)) < 1e-12);
    const auto bm = catalog_e1_bob_meas(n);
    REQUIRE(frobenius_distance(
                s.bob.effects[0],
                bloch_pure_state(bm[0].theta_deg, bm[0].phi_deg)) < 1e-12);
    const auto bp = catalog_e1_bob_preps(n);
    REQUIRE(frobenius_distance(
                s.bob.preps[1],
                bloch_pure_state(bp[1].theta_deg, bp[1].phi_deg)) < 1e-12);
  }
}

TEST_CASE("correlation-step settings pin preparations to the pole", "[settings]") {
  for (int n = 1; n <= 7; ++n) {
    const Step2Setting s2 = catalog_e2_setting(n);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const MpSetting s = s2.pair(a, b);
        REQUIRE_NOTHROW(validate_setting(s));
        REQUIRE(frobenius_distance(s.alice.preps[0], bloch_pure_state(0, 0)) <
                1e-12);
        REQUIRE(frobenius_distance(s.alice.preps[1], bloch_pure_state(0, 0)) <
                1e-12);
        REQUIRE(frobenius_distance(s.alice.effects[0] + s.alice.effects[1],
                                   identity(2)) < 1e-12);
      }
    }
  }
  REQUIRE_THROWS_AS(catalog_e2_setting(9), std::invalid_argument);
}

TEST_CASE("correlation setting 1 measures Z/X against the 45-degree axes",
          "[settings]") {
  const Step2Setting s2 = catalog_e2_setting(1);
  REQUIRE(frobenius_distance(s2.alice_povms[0][0], bloch_pure_state(0, 0)) <
          1e-12);
  REQUIRE(frobenius_distance(s2.alice_povms[1][0], bloch_pure_state(90, 0)) <
          1e-12);
  REQUIRE(frobenius_distance(s2.bob_povms[0][0], bloch_pure_state(45, 0)) <
          1e-12);
  REQUIRE(frobenius_distance(s2.bob_povms[1][0], bloch_pure_state(135, 0)) <
          1e-12);
}

TEST_CASE("tomographically complete setting spans the local operator spaces",
          "[settings]") {
  const MpSetting s = tomographically_complete_setting(2, 2, 2, 2);
  REQUIRE_NOTHROW(validate_setting(s));
  REQUIRE(is_tomographically_complete(s));
  CMat sum = CMat::Zero(2, 2);
  for (const CMat& e : s.alice.effects) sum += e;
  REQUIRE(frobenius_distance(sum, identity(2)) < 1e-12);
}

TEST_CASE("single-basis settings are not tomographically complete", "[settings]") {
  REQUIRE_FALSE(is_tomographically_complete(catalog_e1_setting(1)));
}

TEST_CASE("random settings are valid and seed-deterministic", "[settings]") {
  const MpSetting a = random_s2_setting(2, 2, 2, 2, 5);
  const MpSetting b = random_s2_setting(2, 2, 2, 2, 5);
  const MpSetting c = random_s2_setting(2, 2, 2, 2, 6);
  REQUIRE_NOTHROW(validate_setting(a));
  REQUIRE(frobenius_distance(a.alice.effects[0], b.alice.effects[0]) < 1e-15);
  REQUIRE(frobenius_distance(a.bob.preps[1], b.bob.preps[1]) < 1e-15);
  REQUIRE(frobenius_distance(a.alice.effects[0], c.alice.effects[0]) > 1e-4);
}

TEST_CASE("validate_setting rejects inconsistent players", "[settings]") {
  MpSetting s = catalog_e1_setting(1);
  s.alice.cond(0, 0) = 0.9;  // row no longer sums to 1
  REQUIRE_THROWS_AS(validate_setting(s), std::invalid_argument);

  MpSetting t = catalog_e1_setting(1);
  t.bob.effects[0] = 1.5 * t.bob.effects[0];  // POVM no longer resolves identity
  REQUIRE_THROWS_AS(validate_setting(t), std::invalid_argument);
}
