#pragma once

#include "abflux/constants.hpp"
#include "abflux/curve.hpp"
#include "abflux/field_source.hpp"
#include "abflux/gauge.hpp"

#include <cstddef>

namespace abflux {

// Four-vector with signature (+,-,-,-). For a wavevector the time
// component is omega / c; for a displacement it is c dt.
struct FourVector {
  double t = 0.0;
  Vec3 spatial = Vec3::Zero();

  static FourVector wavevector(double omega, const Vec3& k) {
    return {omega / Constants::c, k};
  }
  static FourVector displacement(double dt, const Vec3& dx) { return {Constants::c * dt, dx}; }

  FourVector scaled(double f) const { return {f * t, f * spatial}; }
};

// a_t b_t - a . b
double contract(const FourVector& a, const FourVector& b) noexcept;

// Phase in rad for an action in J s: dS / hbar.
double action_to_phase(double action) noexcept;

// k_mu dx^mu, the phase a free plane wave picks up over dx.
double plane_wave_phase(const FourVector& k, const FourVector& dx) noexcept;

// p_mu = hbar k_mu (p = hbar k, E = hbar omega).
FourVector four_momentum(const FourVector& k) noexcept;

// Charge moving along a path through a static vector potential; the scalar
// potential is taken as zero.
struct ChargedPath {
  double charge; // C
  Curve path;
  FieldSource source;
};

// (q / hbar) * integral of A . dl along the path, open or closed.
double charged_phase(const ChargedPath& cp, std::size_t refine, const EvalOptions& opts = {});

// A -> A + grad chi.
FieldSource apply_gauge(const FieldSource& source, const GaugeFunction& chi);

// (q / hbar) times the circulation of A around the closed curve gamma.
// Throws GeometryError for an open curve.
double holonomy(double charge, const FieldSource& source, const Curve& gamma,
                std::size_t refine, const EvalOptions& opts = {});

struct FluxQuantization {
  long n;
  double residual; // Wb, phi - n * flux_quantum()
};

// Nearest whole number of flux quanta. Half-integers round away from zero;
// a ratio within 64 ulps of a half-integer counts as the tie, so fluxes
// assembled from decimal multiples of Phi0 (0.2 + 10.3) classify the same
// way regardless of summation order.
FluxQuantization check_flux_quantization(double phi);

} // namespace abflux
