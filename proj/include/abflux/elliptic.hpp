#pragma once

namespace abflux {

// Complete elliptic integrals in the parameter convention m = k^2,
// computed by the arithmetic-geometric mean to ~1e-14 relative.
struct EllipticKE {
  double K;
  double E;
};

// Requires 0 <= m < 1.
EllipticKE elliptic_ke(double m);

// (1 - m/2) K(m) - E(m). Vanishes like pi m^2 / 32; evaluated by power
// series for small m to avoid cancellation.
double loop_potential_kernel(double m);

// (1 - m/2) E(m) - (1 - m) K(m). Vanishes like 3 pi m^2 / 32.
double loop_radial_kernel(double m);

} // namespace abflux
