#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "polariton/eigensystem.hpp"
#include "polariton/error.hpp"

using namespace polariton;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double gram_error(const EigenSystem& es) {
  const auto g = es.gram();
  return (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

Eigen::Vector3d random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Vector3d v(n(rng), n(rng), n(rng));
  return v.normalized();
}

}  // namespace

TEST_CASE("single oscillator 2x2 system") {
  const auto es = build_1d(oracle::sosc_material(), 1.0);
  REQUIRE(es.M.rows() == 2);
  CHECK_THAT(es.M(0, 0).real(), WithinAbs(1.0, 1e-15));
  CHECK_THAT(es.M(1, 1).real(), WithinAbs(4.0, 1e-15));
  CHECK_THAT(std::abs(es.M(0, 1)), WithinAbs(1.0, 1e-15));
  CHECK_THAT((es.M(0, 1) * es.M(1, 0)).real(), WithinAbs(1.0, 1e-15));
  CHECK_THAT(es.G(0), WithinAbs(1.0, 1e-15));
  CHECK_THAT(es.G(1), WithinAbs(1.0, 1e-15));
  CHECK_THAT(es.eigenvalues(0), WithinRel((5.0 - std::sqrt(13.0)) / 2.0, 1e-14));
  CHECK_THAT(es.eigenvalues(1), WithinRel((5.0 + std::sqrt(13.0)) / 2.0, 1e-14));
}

TEST_CASE("vacuum 1D eigenvalue") {
  const auto es = build_1d(oracle::vacuum(), 3.0);
  REQUIRE(es.M.rows() == 1);
  CHECK_THAT(es.eigenvalues(0), WithinRel(9.0, 1e-15));
  for (const auto& c : verify_normalization(es, oracle::vacuum())) CHECK(c.residual < 1e-14);
}

TEST_CASE("1D eigenvalues are the dispersion roots") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = oracle::random_material(rng);
    for (double k : oracle::log_grid(rng, 10, 1e-2, 1e2)) {
      const auto es = build_1d(s, k);
      const auto ref = oracle::roots(s, k);
      CHECK(es.hermiticity_residual() < 1e-12);
      CHECK(gram_error(es) < 1e-10);
      for (std::size_t i = 0; i < ref.size(); ++i)
        CHECK_THAT(es.eigenvalues(static_cast<Eigen::Index>(i)), WithinRel(static_cast<double>(ref[i]), 1e-9));
      for (const auto& c : verify_normalization(es, s)) CHECK(c.residual < 1e-10);
    }
  }
}

TEST_CASE("3D single oscillator structure") {
  const auto s = oracle::sosc_material(0.0, 3);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const auto es = build_3d(s, random_direction(rng));
    REQUIRE(es.eigenvalues.size() == 6);
    int gauge = 0, longitudinal = 0, transverse = 0;
    std::vector<double> t;
    for (std::size_t i = 0; i < es.modes.size(); ++i) {
      switch (es.modes[i].kind) {
        case ModeKind::gauge: ++gauge; break;
        case ModeKind::longitudinal:
          ++longitudinal;
          CHECK_THAT(es.eigenvalues(static_cast<Eigen::Index>(i)), WithinRel(4.0, 1e-12));
          break;
        case ModeKind::transverse: ++transverse; t.push_back(es.eigenvalues(static_cast<Eigen::Index>(i))); break;
      }
    }
    CHECK(gauge == 1);
    CHECK(longitudinal == 1);
    CHECK(transverse == 4);
    std::sort(t.begin(), t.end());
    CHECK_THAT(t[0], WithinRel(oracle::sosc::z_lo, 1e-12));
    CHECK_THAT(t[1], WithinRel(t[0], 1e-12));
    CHECK_THAT(t[2], WithinRel(oracle::sosc::z_hi, 1e-12));
    CHECK_THAT(t[3], WithinRel(t[2], 1e-12));
  }
}

TEST_CASE("3D vacuum") {
  const auto es = build_3d(oracle::vacuum(3), Eigen::Vector3d(0.3, -0.2, 0.9));
  int gauge = 0, transverse = 0;
  for (const auto& m : es.modes) {
    gauge += m.kind == ModeKind::gauge;
    transverse += m.kind == ModeKind::transverse;
  }
  CHECK(gauge == 1);
  CHECK(transverse == 2);
  CHECK_THROWS_AS(build_3d(oracle::vacuum(3), Eigen::Vector3d::Zero()), Error);
}

TEST_CASE("3D randomized materials") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    auto s = oracle::random_material(rng);
    s.units.dimension = 3;
    for (double k : oracle::log_grid(rng, 3, 1e-2, 1e2)) {
      const Eigen::Vector3d kv = k * random_direction(rng);
      const auto es = build_3d(s, kv);
      const auto ref = oracle::roots(s, k);
      const double scale = es.GM().cwiseAbs().rowwise().sum().maxCoeff();
      CHECK(es.hermiticity_residual() < 1e-12);
      CHECK(scale > 0.0);
      CHECK(gram_error(es) < 1e-10);

      std::vector<std::vector<double>> pairs(ref.size());
      for (std::size_t i = 0; i < es.modes.size(); ++i) {
        const auto& m = es.modes[i];
        const double ev = es.eigenvalues(static_cast<Eigen::Index>(i));
        if (m.kind == ModeKind::transverse) {
          REQUIRE(m.mu < ref.size());
          CHECK_THAT(ev, WithinRel(static_cast<double>(ref[m.mu]), 1e-9));
          pairs[m.mu].push_back(ev);
        } else if (m.kind == ModeKind::longitudinal) {
          CHECK_THAT(ev, WithinRel(s.resonances[m.mu].omega2_at(k), 1e-12));
        }
      }
      for (const auto& p : pairs) {
        REQUIRE(p.size() == 2);
        CHECK_THAT(p[0], WithinRel(p[1], 1e-12));
      }
      for (const auto& c : verify_normalization(es, s)) CHECK(c.residual < 1e-10);
    }
  }
}

TEST_CASE("transverse pairs follow the polarization basis") {
  const Eigen::Vector3d k(0.0, 0.0, 1.5);
  const auto basis = polarization_basis(k);
  CHECK(std::abs(basis[0].dot(k)) < 1e-15);
  CHECK(std::abs(basis[1].dot(k)) < 1e-15);
  CHECK(std::abs(basis[0].dot(basis[1])) < 1e-15);
  CHECK_THAT(basis[0].norm(), WithinAbs(1.0, 1e-15));
  CHECK_THAT(basis[1].dot(k.normalized().cross(basis[0])), WithinAbs(1.0, 1e-15));

  const auto es = build_3d(oracle::sosc_material(0.0, 3), k);
  for (std::size_t i = 0; i < es.modes.size(); ++i) {
    if (es.modes[i].kind != ModeKind::transverse) continue;
    const Eigen::Vector3cd field = es.eigenvectors.col(static_cast<Eigen::Index>(i)).head<3>();
    const auto& u = basis[static_cast<std::size_t>(es.modes[i].sigma - 1)];
    const auto& other = basis[static_cast<std::size_t>(2 - es.modes[i].sigma)];
    CHECK(std::abs(field.dot(other.cast<std::complex<double>>())) < 1e-12 * field.norm());
    CHECK(std::abs(field.dot(u.cast<std::complex<double>>())) > 0.5 * field.norm());
  }
}

TEST_CASE("normalization holds with phonon dispersion") {
  const auto s1 = oracle::sosc_material(0.5);
  for (const auto& c : verify_normalization(build_1d(s1, 1.0), s1)) CHECK(c.residual < 1e-10);
  const auto s3 = oracle::sosc_material(0.5, 3);
  const auto es = build_3d(s3, Eigen::Vector3d(0.2, 0.5, 0.8));
  for (const auto& c : verify_normalization(es, s3)) CHECK(c.residual < 1e-10);
  CHECK_THROWS_AS(verify_normalization(es, oracle::sosc_material(0.5, 2)), Error);
}

TEST_CASE("projector and cross matrix") {
  const Eigen::Vector3d k(1.0, 2.0, -2.0);
  const Eigen::Vector3d a(0.3, -1.0, 0.7);
  CHECK((cross_matrix(k) * a - k.cross(a)).norm() < 1e-15);
  const auto p = longitudinal_projector(k, 2);
  CHECK(p.rows() == 9);
  CHECK((p * p - p).norm() < 1e-14);
}
