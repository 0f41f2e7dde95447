#include "abflux/waveform.hpp"

#include "abflux/errors.hpp"

#include <cmath>
#include <sstream>

namespace abflux {

std::vector<double> generate_waveform(const Waveform& w, const Material& ring_material) {
  if (w.steps_per_quarter < 2) {
    throw ConfigError("steps_per_quarter must be >= 2");
  }
  if (w.cycles < 1) {
    throw ConfigError("cycles must be >= 1");
  }
  const double lead = lookup_material("Pb").critical_field;
  const double ring = ring_material.critical_field;
  if (!std::isfinite(w.amplitude) || !(w.amplitude > 0.0)) {
    throw InvalidAmplitudeError("waveform amplitude must be finite and positive");
  }
  if (w.require_quench && !(w.amplitude > ring)) {
    std::ostringstream os;
    os << "amplitude " << w.amplitude << " T does not exceed the " << ring_material.name
       << " critical field " << ring << " T; the ring would never quench";
    throw InvalidAmplitudeError(os.str());
  }
  if (!(w.amplitude < lead)) {
    std::ostringstream os;
    os << "amplitude " << w.amplitude << " T reaches the lead critical field " << lead << " T";
    throw InvalidAmplitudeError(os.str());
  }

  const int q = w.steps_per_quarter;
  std::vector<double> ramp(static_cast<std::size_t>(q) + 1);
  for (int k = 0; k <= q; ++k) {
    ramp[k] = k == q ? w.amplitude : w.amplitude * k / q;
  }

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(w.cycles) * 4 * q + 1);
  out.push_back(0.0);
  for (int c = 0; c < w.cycles; ++c) {
    for (int k = 1; k <= q; ++k) out.push_back(ramp[k]);
    for (int k = q - 1; k >= 0; --k) out.push_back(ramp[k]);
    for (int k = 1; k <= q; ++k) out.push_back(-ramp[k]);
    for (int k = q - 1; k >= 0; --k) out.push_back(k == 0 ? 0.0 : -ramp[k]);
  }
  return out;
}

} // namespace abflux
