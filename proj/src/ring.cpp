#include "abflux/ring.hpp"

#include "abflux/curve.hpp"
#include "abflux/errors.hpp"
#include "abflux/field_source.hpp"
#include "abflux/integrals.hpp"
#include "abflux/phase.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace abflux {

void validate(const TorusCore& core) {
  if (!(core.core_flux >= 0.0) || !std::isfinite(core.core_flux)) {
    throw ConfigError("core flux must be finite and >= 0");
  }
  if (core.orientation != 1 && core.orientation != -1) {
    throw ConfigError("orientation must be +1 or -1");
  }
}

void validate(const RingGeometry& geom) {
  if (!(geom.open_area > 0.0) || !std::isfinite(geom.open_area)) {
    throw ConfigError("open area must be finite and > 0");
  }
  if (!(geom.material.critical_field > 0.0)) {
    throw ConfigError("ring material needs a positive critical field");
  }
}

double probe_reading(const RingState& state, double b_applied, const RingGeometry& geom,
                     const TorusCore& core) {
  if (const auto n = trapped_quanta(state)) {
    return (static_cast<double>(*n) * flux_quantum() - core.signed_flux()) / geom.open_area;
  }
  return b_applied;
}

StepResult step(const RingState& state, double b_applied, const RingGeometry& geom,
                const TorusCore& core, int prior_sign) {
  const double lead_critical = lookup_material("Pb").critical_field;
  if (!(std::abs(b_applied) < lead_critical)) {
    std::ostringstream os;
    os << "applied field " << b_applied << " T reaches the lead critical field "
       << lead_critical << " T";
    throw LeadQuenchError(os.str());
  }
  const double bc = geom.material.critical_field;
  RingState next = state;
  bool trapped = false;
  if (is_superconducting(state)) {
    if (std::abs(b_applied) >= bc) {
      next = NormalState{};
    }
  } else if (std::abs(b_applied) < bc) {
    const int sign = b_applied > 0.0 ? 1 : (b_applied < 0.0 ? -1 : (prior_sign < 0 ? -1 : 1));
    const double enclosed = core.signed_flux() + sign * bc * geom.open_area;
    next = SuperconductingState{check_flux_quantization(enclosed).n};
    trapped = true;
  }
  return {next, probe_reading(next, b_applied, geom, core), trapped};
}

double verify_state_flux(const RingState& state, const RingGeometry& geom, const TorusCore& core,
                         const VerificationSettings& settings) {
  const auto n = trapped_quanta(state);
  if (!n) {
    throw std::invalid_argument("flux verification needs a superconducting state");
  }
  // Regular polygon with area exactly open_area: A = N R^2 sin(2 pi / N) / 2.
  const auto segs = static_cast<double>(settings.gamma_segments);
  const double radius =
      std::sqrt(2.0 * geom.open_area / (segs * std::sin(2.0 * std::numbers::pi / segs)));
  const Curve gamma = make_planar_circle(radius, settings.gamma_segments);

  std::vector<FieldSource> parts;
  parts.push_back(
      FieldSource::flux_filament(make_hopf_partner(radius, settings.core_segments),
                                 core.signed_flux()));
  parts.push_back(FieldSource::uniform(Vec3(0.0, 0.0, probe_reading(state, 0.0, geom, core))));
  const FieldSource total = FieldSource::composite(std::move(parts));

  const double circulation = line_integral_A(total, gamma, settings.refine);
  return circulation - static_cast<double>(*n) * flux_quantum();
}

} // namespace abflux
