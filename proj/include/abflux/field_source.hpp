#pragma once

#include "abflux/curve.hpp"
#include "abflux/gauge.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace abflux {

class FieldSource;

// Homogeneous field B, symmetric gauge A = B x r / 2.
struct UniformField {
  Vec3 B; // T
};

// Circular single-turn loop; positive current circulates right-handed
// about `axis`.
struct CurrentLoop {
  Vec3 center;
  Vec3 axis; // normalized by FieldSource::current_loop
  double radius;  // m
  double current; // A
};

// Idealized closed flux tube of zero thickness carrying `flux` along `path`.
// Outside the tube B = 0 and A is pure gauge with circulation flux x linking.
struct FluxFilament {
  Curve path;
  double flux; // Wb
};

struct GaugeShifted {
  std::shared_ptr<const FieldSource> inner;
  GaugeFunction chi;
};

struct Composite {
  std::vector<FieldSource> parts;
};

class FieldSource {
public:
  using Variant = std::variant<UniformField, CurrentLoop, FluxFilament, GaugeShifted, Composite>;

  static FieldSource uniform(const Vec3& B);
  // Throws GeometryError for a non-positive radius or a zero axis.
  static FieldSource current_loop(const Vec3& center, const Vec3& axis, double radius,
                                  double current);
  // Throws GeometryError when the path is open.
  static FieldSource flux_filament(Curve path, double flux);
  static FieldSource gauge_shifted(FieldSource inner, GaugeFunction chi);
  static FieldSource composite(std::vector<FieldSource> parts);

  const Variant& variant() const noexcept { return v_; }

private:
  explicit FieldSource(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

struct EvalOptions {
  // Closest allowed approach to a filament or loop wire.
  double min_distance = 1e-9; // m
};

// Vector potential in T m. Throws GeometryError when the point lies within
// min_distance of a filament path or loop wire.
Vec3 vector_potential(const FieldSource& source, const Vec3& point,
                      const EvalOptions& opts = {});

// Magnetic field in T for Uniform and CurrentLoop sources (and gauge
// shifts or composites of them). Throws UnsupportedSourceError for a
// flux filament, whose field is singular on its path.
Vec3 magnetic_field(const FieldSource& source, const Vec3& point, const EvalOptions& opts = {});

// Vector potential of a closed flux filament at `point`, summing the exact
// straight-segment Biot-Savart kernel over the polygon segments.
Vec3 filament_vector_potential(const Curve& path, double flux, const Vec3& point,
                               double min_distance);

} // namespace abflux
