#pragma once

#include "abflux/constants.hpp"

#include <cstddef>
#include <optional>
#include <variant>

namespace abflux {

// Lead-coated ferromagnetic torus. Its flux stays inside the coating for the
// whole run; orientation +1 puts the core field along the applied +B
// direction, -1 against it.
struct TorusCore {
  double core_flux = 0.0; // Wb, >= 0
  int orientation = 1;    // +1 or -1

  double signed_flux() const noexcept { return orientation * core_flux; }
};

struct RingGeometry {
  double open_area; // m^2 enclosed by the ring minus the torus footprint
  Material material;
};

// Throws ConfigError on a negative core flux, bad orientation, or
// non-positive open area.
void validate(const TorusCore& core);
void validate(const RingGeometry& geom);

struct NormalState {
  bool operator==(const NormalState&) const = default;
};
struct SuperconductingState {
  long n; // trapped flux quanta
  bool operator==(const SuperconductingState&) const = default;
};
using RingState = std::variant<NormalState, SuperconductingState>;

inline bool is_superconducting(const RingState& s) {
  return std::holds_alternative<SuperconductingState>(s);
}
inline std::optional<long> trapped_quanta(const RingState& s) {
  if (const auto* sc = std::get_if<SuperconductingState>(&s)) {
    return sc->n;
  }
  return std::nullopt;
}

struct StepResult {
  RingState state;
  double probe; // T
  bool trapped; // Normal -> Superconducting happened on this step
};

// Average field over the open area. Transparent (B_applied) when normal;
// (n Phi0 - sigma Phi_core) / open_area when superconducting.
double probe_reading(const RingState& state, double b_applied, const RingGeometry& geom,
                     const TorusCore& core);

// One lumped transition of the tin ring. A superconducting ring quenches at
// |B| >= B_c; a normal ring below B_c traps
//   n = round((sigma Phi_core + sign(B) B_c A) / Phi0)
// with the enclosed flux frozen at the crossing value B_c. `prior_sign` is
// used for sign(0) and should be the sign of the last nonzero applied field.
// Throws LeadQuenchError when |B| reaches the critical field of lead.
StepResult step(const RingState& state, double b_applied, const RingGeometry& geom,
                const TorusCore& core, int prior_sign = 1);

struct VerificationSettings {
  std::size_t gamma_segments = 256;
  std::size_t core_segments = 256;
  std::size_t refine = 2;
  double tolerance_quanta = 1e-3;
};

// Rebuilds the enclosed flux of a superconducting state from fields: the core
// as a flux filament linked once with a regular polygon gamma whose area is
// the open area, plus a uniform field equal to the probe reading. Returns
// circulation(A) - n Phi0 in Wb. Throws std::invalid_argument for a normal state.
double verify_state_flux(const RingState& state, const RingGeometry& geom, const TorusCore& core,
                         const VerificationSettings& settings = {});

} // namespace abflux
