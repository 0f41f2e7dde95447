#include "abflux/coils.hpp"

#include "abflux/errors.hpp"

namespace abflux {

FieldSource helmholtz_pair(double radius, double separation, double current,
                           const Vec3& center, const Vec3& axis) {
  if (!(radius > 0.0) || !(separation > 0.0)) {
    throw GeometryError("Helmholtz pair needs positive radius and separation");
  }
  const Vec3 n = axis.normalized();
  const Vec3 offset = 0.5 * separation * n;
  std::vector<FieldSource> loops;
  loops.push_back(FieldSource::current_loop(center - offset, n, radius, current));
  loops.push_back(FieldSource::current_loop(center + offset, n, radius, current));
  return FieldSource::composite(std::move(loops));
}

} // namespace abflux
