#pragma once

#include "abflux/curve.hpp"
#include "abflux/field_source.hpp"

#include <cstddef>
#include <vector>

namespace abflux {

// Midpoint-rule line integral sum_i A(m_i) . dl_i over the curve with each
// segment split into `refine` pieces. For closed curves this is the
// circulation of A (Wb).
double line_integral_A(const FieldSource& source, const Curve& curve, std::size_t refine,
                       const EvalOptions& opts = {});

struct SurfaceGrid {
  std::size_t radial = 16;   // Gauss-Legendre nodes from the centroid outwards
  std::size_t angular = 1;   // Gauss-Legendre nodes along each curve segment
};

// Flux of B through the flat polygon bounded by `curve`, oriented by the
// curve (right-hand rule). The polygon is fanned from its vertex centroid
// and must be star-shaped about it. Throws GeometryError when a vertex lies
// more than `planarity_tolerance` off the best plane, UnsupportedSourceError
// for sources without a regular B.
double surface_flux(const FieldSource& source, const Curve& curve, const SurfaceGrid& grid,
                    double planarity_tolerance = 1e-9, const EvalOptions& opts = {});

struct LinkingNumber {
  long integer;
  double raw;
  double deviation; // |raw - integer|
};

// Gauss double sum over segment midpoints. Throws GeometryError when any
// pair of segments comes within `min_distance`.
LinkingNumber linking_number(const Curve& c1, const Curve& c2, double min_distance = 1e-9);

// Smallest distance between two straight segments.
double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1);

// Nodes and weights on [0, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre_unit(std::size_t n);

} // namespace abflux
