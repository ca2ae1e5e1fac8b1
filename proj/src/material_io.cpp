#include "polariton/material_io.hpp"

#include <fstream>
#include <sstream>

#include "polariton/error.hpp"

namespace polariton {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) fail(where + ": missing \"" + key + "\"");
  const auto& v = obj.at(key);
  if (!v.is_number()) fail(where + ": \"" + key + "\" must be a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_array()) fail(where + ": \"" + key + "\" must be an array");
  std::vector<double> out;
  for (const auto& v : obj.at(key)) {
    if (!v.is_number()) fail(where + ": \"" + key + "\" must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

UnitSystem parse_units(const json& doc) {
  int dimension = 1;
  if (doc.contains("dimension")) {
    if (!doc["dimension"].is_number_integer()) fail("\"dimension\" must be an integer");
    dimension = doc["dimension"].get<int>();
  }
  std::string mode = "natural";
  if (doc.contains("units")) {
    if (!doc["units"].is_string()) fail("\"units\" must be \"natural\" or \"si\"");
    mode = doc["units"].get<std::string>();
  }
  if (mode == "natural") {
    if (doc.contains("constants")) fail("\"constants\" is only allowed with si units");
    return UnitSystem::natural(dimension);
  }
  if (mode != "si") fail("unknown units \"" + mode + "\"");

  UnitSystem u = UnitSystem::si(dimension);
  if (doc.contains("constants")) {
    const auto& k = doc["constants"];
    if (!k.is_object()) fail("\"constants\" must be an object");
    for (const auto& [key, value] : k.items())
      if (key != "c" && key != "hbar" && key != "eps0" && key != "area") fail("unknown constant \"" + key + "\"");
    const double c = k.contains("c") ? number(k, "c", "constants") : u.c;
    const double hbar = k.contains("hbar") ? number(k, "hbar", "constants") : u.hbar;
    const double eps0 = k.contains("eps0") ? number(k, "eps0", "constants") : u.eps0;
    const double area = k.contains("area") ? number(k, "area", "constants") : u.area;
    u = UnitSystem::si(c, hbar, eps0, area, dimension);
  }
  return u;
}

Resonance parse_resonance(const json& r, std::size_t index, const UnitSystem& units) {
  const std::string where = "resonance " + std::to_string(index);
  if (!r.is_object()) fail(where + ": must be an object");
  Resonance out;
  out.omega2 = number(r, "omega2", where);
  out.alpha = r.contains("alpha") ? number(r, "alpha", where) : 0.0;
  const int raw_fields = r.contains("q") + r.contains("m") + r.contains("rho");
  if (raw_fields != 0 && raw_fields != 3) fail(where + ": \"q\", \"m\" and \"rho\" go together");
  if (raw_fields == 3)
    out.raw = RawCoupling{number(r, "q", where), number(r, "m", where), number(r, "rho", where)};
  if (r.contains("g"))
    out.g = number(r, "g", where);
  else if (out.raw)
    out.g = Resonance::coupling_from_raw(*out.raw, units.eps0);
  else
    fail(where + ": needs \"g\" or the triple q, m, rho");
  return out;
}

}  // namespace

MaterialSpec parse_material(const json& doc) {
  if (!doc.is_object()) fail("material must be a JSON object");
  MaterialSpec spec;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("\"name\" must be a string");
    spec.name = doc["name"].get<std::string>();
  }
  spec.units = parse_units(doc);

  const bool has_res = doc.contains("resonances");
  const bool has_sell = doc.contains("sellmeier_wavelength");
  const bool has_poles = doc.contains("sellmeier");
  if (has_res + has_sell + has_poles != 1)
    fail("exactly one of \"resonances\", \"sellmeier\" and \"sellmeier_wavelength\" is required");

  if (has_res) {
    if (!doc["resonances"].is_array()) fail("\"resonances\" must be an array");
    std::size_t i = 0;
    for (const auto& r : doc["resonances"]) spec.resonances.push_back(parse_resonance(r, i++, spec.units));
    return spec;
  }
  if (has_poles) {
    const auto& s = doc["sellmeier"];
    if (!s.is_object()) fail("\"sellmeier\" must be an object");
    SellmeirForm form{numbers(s, "poles", "sellmeier"), numbers(s, "strengths", "sellmeier")};
    try {
      return sellmeir_to_multipolar(form, spec.units, spec.name);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidArgument) fail(e.what());
      throw;
    }
  }
  const auto& s = doc["sellmeier_wavelength"];
  if (!s.is_object()) fail("\"sellmeier_wavelength\" must be an object");
  const auto b = numbers(s, "B", "sellmeier_wavelength");
  const auto c = numbers(s, "C_um2", "sellmeier_wavelength");
  const auto form = sellmeir_from_wavelength_form(b, c, spec.units);
  return sellmeir_to_multipolar(form, spec.units, spec.name);
}

MaterialSpec parse_material(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return parse_material(doc);
}

MaterialSpec load_material(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_material(buf.str());
}

json material_to_json(const MaterialSpec& spec) {
  json doc;
  doc["name"] = spec.name;
  doc["dimension"] = spec.units.dimension;
  doc["units"] = spec.units.mode == UnitMode::si ? "si" : "natural";
  if (spec.units.mode == UnitMode::si)
    doc["constants"] = {{"c", spec.units.c}, {"hbar", spec.units.hbar}, {"eps0", spec.units.eps0}, {"area", spec.units.area}};
  json res = json::array();
  for (const auto& r : spec.resonances) {
    json entry = {{"omega2", r.omega2}, {"g", r.g}, {"alpha", r.alpha}};
    if (r.raw) {
      entry["q"] = r.raw->charge;
      entry["m"] = r.raw->mass;
      entry["rho"] = r.raw->density;
    }
    res.push_back(entry);
  }
  doc["resonances"] = res;
  return doc;
}

}  // namespace polariton
