#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "polariton/error.hpp"
#include "polariton/material.hpp"

using namespace polariton;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

bool has_code(const ValidationReport& r, const std::string& code) {
  for (const auto& v : r.violations)
    if (v.code == code) return true;
  return false;
}

MaterialSpec one(double omega2, double g, double alpha = 0.0) {
  MaterialSpec s;
  s.resonances = {{omega2, g, alpha, std::nullopt}};
  return s;
}

}  // namespace

TEST_CASE("fixtures validate") {
  CHECK(validate(oracle::sosc_material()).valid());
  CHECK(validate(oracle::duo_material()).valid());
  CHECK(validate(oracle::vacuum()).valid());
}

TEST_CASE("overloaded coupling names the inequality") {
  const auto r = validate(one(4.0, 5.0));
  REQUIRE_FALSE(r.valid());
  REQUIRE(has_code(r, "sum_rule"));
  CHECK(r.violations.front().message.find(">= 1") != std::string::npos);
  CHECK_THROWS_AS(require_valid(one(4.0, 5.0)), Error);
  try {
    require_valid(one(4.0, 5.0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidMaterial);
  }
}

TEST_CASE("each invariant is reported with its resonance index") {
  auto r = validate(one(-1.0, 0.1));
  REQUIRE(has_code(r, "omega2.nonpositive"));
  CHECK(r.violations.front().index == std::optional<std::size_t>(0));
  CHECK(has_code(validate(one(4.0, 0.0)), "g.nonpositive"));
  CHECK(has_code(validate(one(4.0, 1.0, -0.1)), "alpha.negative"));

  MaterialSpec dup;
  dup.resonances = {{4.0, 0.5, 0.0, std::nullopt}, {4.0, 0.5, 0.0, std::nullopt}};
  CHECK(has_code(validate(dup), "omega2.duplicate"));

  MaterialSpec bad_units = oracle::sosc_material();
  bad_units.units.dimension = 4;
  CHECK(has_code(validate(bad_units), "units.dimension"));
}

TEST_CASE("validity is exactly the two inequalities on a small exhaustive grid") {
  const double values[] = {-1.0, 0.0, 0.5, 2.0, 3.0, 10.0};
  for (double w1 : values)
    for (double g1 : values)
      for (double w2 : values)
        for (double g2 : values) {
          MaterialSpec s;
          s.resonances = {{w1, g1, 0.0, std::nullopt}, {w2, g2, 0.0, std::nullopt}};
          const bool positive = w1 > 0 && w2 > 0 && g1 > 0 && g2 > 0;
          const bool distinct = w1 != w2;
          const bool loading = positive && g1 / w1 + g2 / w2 < 1.0;
          CHECK(validate(s).valid() == (positive && distinct && loading));
        }
}

TEST_CASE("raw coupling gives q^2 rho / (m eps0)") {
  const RawCoupling raw{2.0, 4.0, 3.0};
  CHECK_THAT(Resonance::coupling_from_raw(raw, 0.5), WithinRel(6.0, 1e-15));
  const auto r = Resonance::from_raw(10.0, raw, 0.5, 0.1);
  CHECK(r.g == Resonance::coupling_from_raw(raw, 0.5));
  CHECK(r.raw.has_value());
}

TEST_CASE("natural and si unit systems") {
  const auto n = UnitSystem::natural(3);
  CHECK(n.c == 1.0);
  CHECK(n.dimension == 3);
  const auto si = UnitSystem::si();
  CHECK(si.c == 299792458.0);
  CHECK_THAT(si.mu * si.eps0 * si.c * si.c, WithinRel(1.0, 1e-15));
}

TEST_CASE("refractive index at fixed frequencies") {
  const auto s = oracle::sosc_material();
  CHECK_THAT(refractive_index_sq(s, 1.0), WithinRel(1.5, 1e-15));
  CHECK_THAT(refractive_index_sq(s, 0.0), WithinRel(4.0 / 3.0, 1e-15));
  CHECK_THAT(refractive_index_sq(s, 1.9), WithinRel(-0.6393442622950820, 1e-13));
  CHECK(refractive_index_sq(oracle::vacuum(), 7.0) == 1.0);
  CHECK_THROWS_AS(refractive_index_sq(s, 2.0), Error);
  CHECK_THROWS_AS(refractive_index_sq(s, std::sqrt(3.0)), Error);
}

TEST_CASE("refractive index agrees with the closed form on random materials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = oracle::random_material(rng, false);
    const double wmax = s.size() ? std::sqrt(s.resonances.back().omega2) : 1.0;
    for (double w : {0.0, 0.1, 0.37 * wmax, 2.3 * wmax, 50.0 * wmax}) {
      bool near_pole = false;
      for (const auto& r : s.resonances) near_pole = near_pole || std::abs(r.omega2 - w * w) < 1e-6 * r.omega2;
      if (near_pole) continue;
      const double ref = oracle::n2(s, w);
      CHECK_THAT(refractive_index_sq(s, w), WithinRel(ref, 1e-11));
    }
  }
}

TEST_CASE("high-frequency approach to one") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = oracle::random_material(rng, false);
    if (s.size() == 0) continue;
    double wmax2 = 0.0, gsum = 0.0;
    for (const auto& r : s.resonances) {
      wmax2 = std::max(wmax2, r.omega2);
      gsum += r.g;
    }
    const double w = 1e3 * std::sqrt(wmax2);
    CHECK(std::abs(refractive_index_sq(s, w) - 1.0) < 10.0 * gsum / wmax2);
    // monotone towards one above the top resonance
    double prev = refractive_index_sq(s, 1.01 * std::sqrt(wmax2) + 1e-9);
    for (double f = 1.5; f < 1e3; f *= 1.5) {
      const double cur = refractive_index_sq(s, f * std::sqrt(wmax2));
      CHECK(cur >= prev);
      CHECK(cur <= 1.0);
      prev = cur;
    }
  }
}

TEST_CASE("single resonance shifts by g in pole form") {
  const auto form = multipolar_to_sellmeir(oracle::sosc_material());
  REQUIRE(form.size() == 1);
  CHECK_THAT(form.poles[0], WithinRel(3.0, 1e-14));
  CHECK_THAT(form.strengths[0], WithinRel(1.0, 1e-14));
  const auto back = sellmeir_to_multipolar(form);
  CHECK_THAT(back.resonances[0].omega2, WithinRel(4.0, 1e-14));
  CHECK_THAT(back.resonances[0].g, WithinRel(1.0, 1e-14));
}

TEST_CASE("pole form evaluates to the same index") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = oracle::random_material(rng, false);
    if (s.size() > 4) continue;
    const auto form = multipolar_to_sellmeir(s);
    for (double z : {0.0, 0.3, 2.0, 17.0, 450.0, 2e4}) {
      bool near_pole = false;
      for (double p : form.poles) near_pole = near_pole || std::abs(p - z) < 1e-4 * p;
      for (const auto& r : s.resonances) near_pole = near_pole || std::abs(r.omega2 - z) < 1e-4 * r.omega2;
      if (near_pole) continue;
      CHECK_THAT(oracle::n2_sellmeir(form.poles, form.strengths, z), WithinRel(oracle::n2(s, std::sqrt(z)), 1e-9));
    }
  }
}

TEST_CASE("pole-form conversion rejects bad input") {
  auto s = oracle::sosc_material(0.5);
  CHECK_THROWS_AS(multipolar_to_sellmeir(s), Error);
  CHECK_THROWS_AS(sellmeir_to_multipolar(SellmeirForm{{3.0, 1.0}, {1.0, 1.0}}), Error);
  CHECK_THROWS_AS(sellmeir_to_multipolar(SellmeirForm{{3.0}, {-1.0}}), Error);
  CHECK_THROWS_AS(sellmeir_from_wavelength_form(std::vector<double>{1.0}, std::vector<double>{0.01},
                                                UnitSystem::natural()),
                  Error);
}

TEST_CASE("fused silica wavelength form") {
  const auto units = UnitSystem::si();
  const auto c2 = oracle::silica_C_um2();
  const auto form = sellmeir_from_wavelength_form(oracle::silica_B, c2, units);
  REQUIRE(form.size() == 3);
  const auto spec = sellmeir_to_multipolar(form, units, "silica");
  CHECK(validate(spec).valid());
  for (double lambda_um : {0.4, 0.5876, 1.0, 1.55, 2.5}) {
    const double omega = 2.0 * M_PI * units.c / (lambda_um * 1e-6);
    const double n = std::sqrt(refractive_index_sq(spec, omega));
    CHECK_THAT(n, WithinRel(static_cast<double>(std::sqrt(oracle::silica_n2(lambda_um))), 1e-9));
  }
  const double omega_d = 2.0 * M_PI * units.c / 587.6e-9;
  CHECK_THAT(std::sqrt(refractive_index_sq(spec, omega_d)), WithinAbs(1.4585, 5e-4));
}
