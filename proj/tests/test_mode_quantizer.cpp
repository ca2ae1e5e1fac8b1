#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "polariton/error.hpp"
#include "polariton/mode_quantizer.hpp"

using namespace polariton;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("1D coefficients of the single oscillator") {
  const auto s = oracle::sosc_material();
  const auto b = solve_branches(s, 1.0);
  const auto lo = mode_coefficients_1d(s, b[0]);
  CHECK_THAT(lo.Lambda * lo.Lambda, WithinRel(oracle::sosc::lambda2_lo, 1e-13));
  CHECK_THAT(lo.Lambda, WithinRel(oracle::sosc::lambda_lo, 1e-13));
  CHECK_THAT(std::abs(lo.p[0]), WithinRel(oracle::sosc::p_abs_lo, 1e-13));
  CHECK_THAT(lo.eps_branch, WithinRel(oracle::sosc::eps_lo, 1e-13));
  const auto hi = mode_coefficients_1d(s, b[1]);
  CHECK_THAT(hi.Lambda, WithinRel(oracle::sosc::lambda_hi, 1e-13));
  CHECK_THAT(hi.p[0].imag(), WithinRel(oracle::sosc::p_hi, 1e-13));
  CHECK_THAT(hi.eps_branch, WithinRel(oracle::sosc::eps_hi, 1e-13));

  // structure: D = i k Lambda, E = D / eps, B = Pi = -i omega mu Lambda
  CHECK_THAT(lo.D.imag(), WithinRel(lo.Lambda, 1e-15));
  CHECK(std::abs(lo.E - lo.D / lo.eps_branch) < 1e-16);
  CHECK_THAT(lo.B.imag(), WithinRel(-lo.omega * lo.Lambda, 1e-15));
  CHECK(lo.B == lo.Pi);
  CHECK_THAT(lo.pi[0].real(), WithinRel(lo.omega * lo.Lambda / (4.0 - lo.omega * lo.omega), 1e-13));
}

TEST_CASE("1D vacuum coefficients") {
  const auto s = oracle::vacuum();
  const auto b = solve_branches(s, 1.0);
  const auto m = mode_coefficients_1d(s, b[0]);
  CHECK_THAT(m.Lambda, WithinRel(std::sqrt(1.0 / (4.0 * std::numbers::pi)), 1e-15));
  CHECK(m.p.empty());
  CHECK_THAT(frequency_domain_rescale(b[0]), WithinRel(1.0, 1e-15));
  CHECK(std::abs(field_expansion_coefficient(s, b[0], Field::E) - m.D) < 1e-16);
}

TEST_CASE("frequency-domain rescale") {
  const auto b = solve_branches(oracle::sosc_material(), 1.0);
  CHECK_THAT(frequency_domain_rescale(b[0]), WithinRel(oracle::sosc::rescale_lo, 1e-13));
  CHECK_THAT(frequency_domain_rescale(b[1]), WithinRel(oracle::sosc::rescale_hi, 1e-13));
  BranchPoint still = b[0];
  still.v_group = 0.0;
  CHECK_THROWS_AS(frequency_domain_rescale(still), Error);
}

TEST_CASE("frequency-domain D coefficient") {
  // D rescaled to the omega measure is [hbar k eps / (4 pi A)]^(1/2) with k = k(omega)
  const auto s = oracle::sosc_material();
  for (const auto& bp : solve_branches(s, 0.8)) {
    const auto m = mode_coefficients_1d(s, bp);
    const double d = std::abs(m.D) * frequency_domain_rescale(bp);
    CHECK_THAT(d * d, WithinRel(bp.k * m.eps_branch / (4.0 * std::numbers::pi), 1e-13));
  }
}

TEST_CASE("3D coefficients") {
  const auto s = oracle::sosc_material(0.0, 3);
  BranchPoint lp;
  lp.branch = 0;
  lp.k = 1.0;
  const auto l = mode_coefficients_3d(s, lp, 0);
  CHECK_THAT(std::abs(l.p[0]), WithinRel(oracle::sosc::p_longitudinal, 1e-13));
  CHECK_THAT(l.omega, WithinRel(2.0, 1e-15));
  CHECK(std::abs(l.E + l.p[0] / s.units.eps0) < 1e-16);

  const auto b = solve_branches(s, 1.0);
  const double volume = std::pow(2.0 * std::numbers::pi, 3);
  for (int sigma : {1, 2}) {
    const auto t = mode_coefficients_3d(s, b[0], sigma);
    CHECK_THAT(t.Lambda * t.Lambda,
               WithinRel(oracle::sosc::v_lo * oracle::sosc::eps_lo / (2.0 * volume), 1e-13));
    CHECK(std::abs(t.u.dot(t.e)) < 1e-15);
    CHECK(std::abs(t.u.dot(Eigen::Vector3d::UnitZ())) < 1e-15);
  }
  CHECK_THROWS_AS(mode_coefficients_3d(s, b[0], -1), Error);
  CHECK_THROWS_AS(mode_coefficients_3d(oracle::sosc_material(), b[0], 1), Error);
  try {
    mode_coefficients_3d(s, b[0], -1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnphysicalMode);
  }
}

TEST_CASE("field coefficient refuses forbidden frequencies") {
  const auto s = oracle::sosc_material();
  auto bp = solve_branches(s, 1.0)[0];
  bp.omega = 1.9;
  CHECK_THROWS_AS(field_expansion_coefficient(s, bp, Field::D), Error);
}

TEST_CASE("smeared commutators") {
  const auto s = oracle::sosc_material();
  const double K = 50.0;
  const GaussianTest f{0.0, 20.0 / K};

  const auto lp = kernel_reconstruction(s, KernelPair::lambda_pi, f, 0.0, K);
  CHECK(std::abs(lp.value - lp.target) < 5e-3 * std::abs(lp.target));
  CHECK_THAT(lp.target.imag(), WithinRel(1.0, 1e-15));

  // off-centre, where the integrand is not zero by symmetry
  const auto ln = kernel_reconstruction(s, KernelPair::lambda_pi_nu, f, 0.2, K);
  CHECK(std::abs(ln.value) < 1e-3 * f(0.2));
  const auto single = kernel_reconstruction(s, KernelPair::lambda_pi, f, 0.2, K);
  CHECK(std::abs(single.value - single.target) < 5e-3 * std::abs(single.target));

  KernelOptions same;
  const auto pp = kernel_reconstruction(s, KernelPair::p_pi, f, 0.1, K, same);
  CHECK(std::abs(pp.value - pp.target) < 5e-3 * std::abs(pp.target));

  const auto db = kernel_reconstruction(oracle::vacuum(), KernelPair::d_b, f, 0.3, K);
  const double h = 1e-5;
  const double fd = (f(0.3 + h) - f(0.3 - h)) / (2 * h);
  CHECK_THAT(db.target.imag(), WithinRel(fd, 1e-8));
  CHECK(std::abs(db.value - db.target) < 5e-3 * std::abs(db.target));
}

TEST_CASE("kernel cross pairs vanish for two resonances") {
  const auto s = oracle::duo_material();
  const GaussianTest f{0.0, 1.0};
  KernelOptions cross;
  cross.nu = 0;
  cross.nu_prime = 1;
  const auto v = kernel_reconstruction(s, KernelPair::p_pi, f, 0.2, 10.0, cross);
  CHECK(std::abs(v.value) < 1e-3 * f(0.2));
  cross.nu_prime = 2;
  CHECK_THROWS_AS(kernel_reconstruction(s, KernelPair::p_pi, f, 0.2, 10.0, cross), Error);
}

TEST_CASE("kernel cutoff must cover the test spectrum") {
  const GaussianTest f{0.0, 1.0};
  try {
    kernel_reconstruction(oracle::sosc_material(), KernelPair::lambda_pi, f, 0.0, 3.0);
    FAIL("expected CutoffTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CutoffTooSmall);
  }
}
