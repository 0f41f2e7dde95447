#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstddef>
#include <vector>

namespace abflux {

using Vec3 = Eigen::Vector3d;

// Discretized oriented path in 3-space. A closed curve stores each vertex
// once; the segment from the last vertex back to the first is implied.
class Curve {
public:
  struct Segment {
    Vec3 start;
    Vec3 end;
    Vec3 delta() const { return end - start; }
    Vec3 midpoint() const { return 0.5 * (start + end); }
  };

  // Throws GeometryError when there are too few points, a non-finite
  // coordinate, or a zero-length segment.
  Curve(std::vector<Vec3> points, bool closed);

  const std::vector<Vec3>& points() const noexcept { return points_; }
  bool closed() const noexcept { return closed_; }
  std::size_t segment_count() const noexcept;
  Segment segment(std::size_t i) const;

  Curve reversed() const;

  // Each segment split into `pieces` equal straight sub-segments.
  Curve subdivided(std::size_t pieces) const;

  // Polygon vector area 1/2 sum p_i x p_{i+1}; closed curves only.
  Vec3 vector_area() const;
  Vec3 centroid() const;

private:
  std::vector<Vec3> points_;
  bool closed_;
};

// n-gon inscribed in the circle center + r (cos t u + sin t v), traversed
// with increasing t. `u` and `v` must be orthonormal; the orientation
// normal is u x v.
Curve make_circle(const Vec3& center, const Vec3& u, const Vec3& v, double radius,
                  std::size_t segments);

// Circle of radius r in the z = 0 plane about the origin, counterclockwise
// seen from +z.
Curve make_planar_circle(double radius, std::size_t segments);

// Circle of radius r in the x = 0 plane centered at (0, r, 0), oriented so
// its linking number with make_planar_circle(r, .) is +1.
Curve make_hopf_partner(double radius, std::size_t segments);

// Straight open path from a to b in `segments` equal pieces.
Curve make_segment_path(const Vec3& a, const Vec3& b, std::size_t segments);

// Open curve a -> ... -> b followed by b -> ... -> c. The shared endpoint
// must match exactly.
Curve concatenate(const Curve& first, const Curve& second);

// Closed curve traversed `times` times (vertex list repeated).
Curve repeated(const Curve& closed_curve, std::size_t times);

} // namespace abflux
