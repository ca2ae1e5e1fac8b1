#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "polariton/material.hpp"

namespace polariton {

/// Material file layout (all numbers in the file's unit system):
///
///   {"name": "...", "dimension": 1|2|3, "units": "natural"|"si",
///    "constants": {"c", "hbar", "eps0", "area"},          (si only, optional)
///    "resonances": [{"omega2", "g", "alpha", "q", "m", "rho"}],
///    "sellmeier": {"poles": [...], "strengths": [...]},
///    "sellmeier_wavelength": {"B": [...], "C_um2": [...]}}
///
/// Exactly one of "resonances", "sellmeier" and "sellmeier_wavelength" must be
/// present; the last two are converted to resonances on load. In a resonance, "g" may be
/// replaced by the raw triple q, m, rho. Malformed input raises ParseError.
MaterialSpec parse_material(const nlohmann::json& doc);
MaterialSpec parse_material(const std::string& text);
MaterialSpec load_material(const std::filesystem::path& path);

nlohmann::json material_to_json(const MaterialSpec& spec);

}  // namespace polariton
