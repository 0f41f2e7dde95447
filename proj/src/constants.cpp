#include "abflux/constants.hpp"

#include "abflux/errors.hpp"

namespace abflux {

double flux_quantum() noexcept { return Constants::h / (2.0 * Constants::e); }

double gauss_to_tesla(double gauss) noexcept { return gauss / 1e4; }

double tesla_to_gauss(double tesla) noexcept { return tesla * 1e4; }

const std::map<std::string, Material>& material_table() {
  static const std::map<std::string, Material> table{
      {"Sn", {"Sn", gauss_to_tesla(280.0)}},
      {"Pb", {"Pb", gauss_to_tesla(780.0)}},
  };
  return table;
}

const Material& lookup_material(const std::string& name) {
  const auto& table = material_table();
  auto it = table.find(name);
  if (it == table.end()) {
    throw NotFoundError("unknown material '" + name + "'");
  }
  return it->second;
}

} // namespace abflux
