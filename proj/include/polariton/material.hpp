#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polariton {

/// Charge, mass and number density of one oscillator species.
struct RawCoupling {
  double charge = 0.0;
  double mass = 0.0;
  double density = 0.0;
};

/// One Drude-Lorentz resonance. `omega2` is the squared bare resonant
/// frequency, `g` the coupling strength (same units as omega2) and `alpha`
/// the phonon/exciton dispersion coefficient, so that the resonance at
/// wavenumber k sits at omega2 + alpha k^2.
struct Resonance {
  double omega2 = 0.0;
  double g = 0.0;
  double alpha = 0.0;
  std::optional<RawCoupling> raw;

  double omega2_at(double k) const { return omega2 + alpha * k * k; }

  /// g = q^2 rho / (m eps0).
  static double coupling_from_raw(const RawCoupling& raw, double eps0);
  static Resonance from_raw(double omega2, const RawCoupling& raw, double eps0, double alpha = 0.0);
};

enum class UnitMode { natural, si };

struct UnitSystem {
  double c = 1.0;
  double hbar = 1.0;
  double eps0 = 1.0;
  double mu = 1.0;  ///< vacuum permeability, 1 / (eps0 c^2)
  double area = 1.0;
  int dimension = 1;
  UnitMode mode = UnitMode::natural;

  static UnitSystem natural(int dimension = 1);
  /// CODATA 2018 constants; permeability derived from eps0 and c.
  static UnitSystem si(int dimension = 1, double area = 1.0);
  static UnitSystem si(double c, double hbar, double eps0, double area, int dimension);
};

struct MaterialSpec {
  std::string name;
  std::vector<Resonance> resonances;
  UnitSystem units;

  std::size_t size() const { return resonances.size(); }
  bool has_spatial_dispersion() const;
  /// Largest bare omega2, or 1 for vacuum. Sets the scale of all root-finding
  /// tolerances.
  double reference_omega2() const;
  /// omega_nu^2(k) for every resonance, in resonance order.
  std::vector<double> omega2_at(double k) const;
  std::vector<double> couplings() const;
};

/// Shifted-pole form n^2 = 1 + sum strengths / (poles - omega^2), poles sorted
/// ascending.
struct SellmeirForm {
  std::vector<double> poles;
  std::vector<double> strengths;

  std::size_t size() const { return poles.size(); }
  double n2_at_z(double z) const;
};

struct Violation {
  std::string code;
  std::optional<std::size_t> index;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;
  bool valid() const { return violations.empty(); }
};

/// Relative tolerance (of the reference omega2) below which two poles or a
/// frequency and a pole are treated as coincident.
inline constexpr double kDistinctTolerance = 1e-9;

ValidationReport validate(const MaterialSpec& spec);
/// Throws Error(InvalidMaterial) naming the first violation.
void require_valid(const MaterialSpec& spec);

/// n^2(omega) = [1 - sum g / (omega_nu^2(k) - omega^2)]^-1. Negative inside a
/// forbidden band. `k` is required when any alpha is non-zero.
double refractive_index_sq(const MaterialSpec& spec, double omega, std::optional<double> k = std::nullopt);

SellmeirForm multipolar_to_sellmeir(const MaterialSpec& spec);
MaterialSpec sellmeir_to_multipolar(const SellmeirForm& form, const UnitSystem& units = UnitSystem::natural(),
                                    std::string name = {});

/// Converts n^2 = 1 + sum B_i lambda^2 / (lambda^2 - C_i), with C_i in um^2,
/// to shifted-pole form in angular frequency.
SellmeirForm sellmeir_from_wavelength_form(std::span<const double> B, std::span<const double> C_um2,
                                           const UnitSystem& units);

}  // namespace polariton
