#include "abflux/phase.hpp"

#include "abflux/constants.hpp"
#include "abflux/errors.hpp"
#include "abflux/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace abflux {

double contract(const FourVector& a, const FourVector& b) noexcept {
  return a.t * b.t - a.spatial.dot(b.spatial);
}

double action_to_phase(double action) noexcept { return action / Constants::hbar; }

double plane_wave_phase(const FourVector& k, const FourVector& dx) noexcept {
  return contract(k, dx);
}

FourVector four_momentum(const FourVector& k) noexcept { return k.scaled(Constants::hbar); }

double charged_phase(const ChargedPath& cp, std::size_t refine, const EvalOptions& opts) {
  return (cp.charge / Constants::hbar) * line_integral_A(cp.source, cp.path, refine, opts);
}

FieldSource apply_gauge(const FieldSource& source, const GaugeFunction& chi) {
  return FieldSource::gauge_shifted(source, chi);
}

double holonomy(double charge, const FieldSource& source, const Curve& gamma,
                std::size_t refine, const EvalOptions& opts) {
  if (!gamma.closed()) {
    throw GeometryError("holonomy needs a closed curve");
  }
  return (charge / Constants::hbar) * line_integral_A(source, gamma, refine, opts);
}

FluxQuantization check_flux_quantization(double phi) {
  const double phi0 = flux_quantum();
  const double ratio = phi / phi0;
  const double lower = std::floor(ratio);
  const double frac = ratio - lower;
  const double tie_tol =
      64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(ratio));
  double n;
  if (std::abs(frac - 0.5) <= tie_tol) {
    n = (lower + 0.5 >= 0.0) ? lower + 1.0 : lower;
  } else {
    n = std::round(ratio);
  }
  const long whole = static_cast<long>(n);
  return {whole, phi - static_cast<double>(whole) * phi0};
}

} // namespace abflux
