#pragma once

#include "abflux/field_source.hpp"

namespace abflux {

// Two coaxial single-turn loops at center +/- separation/2 along `axis`,
// both carrying `current` in the same sense. Separation equal to the radius
// gives the Helmholtz configuration.
FieldSource helmholtz_pair(double radius, double separation, double current,
                           const Vec3& center = Vec3::Zero(),
                           const Vec3& axis = Vec3::UnitZ());

} // namespace abflux
