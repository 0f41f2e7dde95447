#pragma once

#include <map>
#include <numbers>
#include <string>

namespace abflux {

// Exact SI-2019 defining constants. Everything inside the library is SI;
// Gauss only shows up at the config and CLI boundary.
struct Constants {
  static constexpr double h = 6.62607015e-34;       // J s
  static constexpr double e = 1.602176634e-19;      // C
  static constexpr double hbar = h / (2.0 * std::numbers::pi);
  static constexpr double c = 299792458.0;          // m/s
  static constexpr double mu0 = 1.25663706212e-6;   // T m/A (CODATA 2018)
};

// h / (2e), the superconducting flux quantum in Wb.
double flux_quantum() noexcept;

double gauss_to_tesla(double gauss) noexcept;
double tesla_to_gauss(double tesla) noexcept;

struct Material {
  std::string name;
  double critical_field; // T, near zero temperature
};

// Presets keyed by chemical symbol ("Sn", "Pb").
const std::map<std::string, Material>& material_table();

// Throws NotFoundError for an unknown name.
const Material& lookup_material(const std::string& name);

} // namespace abflux
