#include "abflux/gauge.hpp"

#include "abflux/detail/overloaded.hpp"

#include <cmath>

namespace abflux {
using detail::overloaded;

GaugeFunction::GaugeFunction(QuadraticGauge g)
    : form_(QuadraticGauge{0.5 * (g.Q + g.Q.transpose())}) {}

double GaugeFunction::value(const Vec3& x) const {
  return std::visit(overloaded{
                        [&](const LinearGauge& g) { return g.a.dot(x); },
                        [&](const QuadraticGauge& g) { return 0.5 * x.dot(g.Q * x); },
                        [&](const SinusoidalGauge& g) {
                          return g.amplitude * std::sin(g.k.dot(x));
                        },
                    },
                    form_);
}

Vec3 GaugeFunction::gradient(const Vec3& x) const {
  return std::visit(overloaded{
                        [&](const LinearGauge& g) -> Vec3 { return g.a; },
                        [&](const QuadraticGauge& g) -> Vec3 { return g.Q * x; },
                        [&](const SinusoidalGauge& g) -> Vec3 {
                          return g.amplitude * std::cos(g.k.dot(x)) * g.k;
                        },
                    },
                    form_);
}

} // namespace abflux
