#include "abflux/curve.hpp"

#include "abflux/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace abflux {

Curve::Curve(std::vector<Vec3> points, bool closed)
    : points_(std::move(points)), closed_(closed) {
  const std::size_t min_points = closed_ ? 3 : 2;
  if (points_.size() < min_points) {
    throw GeometryError((closed_ ? "closed" : "open") + std::string(" curve needs at least ") +
                        std::to_string(min_points) + " points, got " +
                        std::to_string(points_.size()));
  }
  for (const auto& p : points_) {
    if (!p.allFinite()) {
      throw GeometryError("curve vertex has a non-finite coordinate");
    }
  }
  for (std::size_t i = 0; i < segment_count(); ++i) {
    const Segment s = segment(i);
    if (s.start == s.end) {
      throw GeometryError("curve segment " + std::to_string(i) + " has zero length");
    }
  }
}

std::size_t Curve::segment_count() const noexcept {
  return closed_ ? points_.size() : points_.size() - 1;
}

Curve::Segment Curve::segment(std::size_t i) const {
  const std::size_t j = (i + 1 == points_.size()) ? 0 : i + 1;
  return {points_[i], points_[j]};
}

Curve Curve::reversed() const {
  std::vector<Vec3> rev(points_.rbegin(), points_.rend());
  return Curve(std::move(rev), closed_);
}

Curve Curve::subdivided(std::size_t pieces) const {
  if (pieces == 0) {
    throw GeometryError("subdivision count must be at least 1");
  }
  if (pieces == 1) {
    return *this;
  }
  std::vector<Vec3> out;
  out.reserve(segment_count() * pieces + 1);
  for (std::size_t i = 0; i < segment_count(); ++i) {
    const Segment s = segment(i);
    for (std::size_t k = 0; k < pieces; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(pieces);
      out.push_back(k == 0 ? s.start : Vec3(s.start + t * s.delta()));
    }
  }
  if (!closed_) {
    out.push_back(points_.back());
  }
  return Curve(std::move(out), closed_);
}

Vec3 Curve::vector_area() const {
  if (!closed_) {
    throw GeometryError("vector area is defined for closed curves only");
  }
  // Relative to the first vertex so translated curves lose no precision.
  Vec3 sum = Vec3::Zero();
  const Vec3& origin = points_.front();
  for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
    sum += (points_[i] - origin).cross(points_[i + 1] - origin);
  }
  return 0.5 * sum;
}

Vec3 Curve::centroid() const {
  Vec3 sum = Vec3::Zero();
  for (const auto& p : points_) {
    sum += p;
  }
  return sum / static_cast<double>(points_.size());
}

Curve make_circle(const Vec3& center, const Vec3& u, const Vec3& v, double radius,
                  std::size_t segments) {
  if (!(radius > 0.0)) {
    throw GeometryError("circle radius must be positive");
  }
  std::vector<Vec3> pts;
  pts.reserve(segments);
  for (std::size_t i = 0; i < segments; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) /
                     static_cast<double>(segments);
    pts.push_back(center + radius * (std::cos(t) * u + std::sin(t) * v));
  }
  return Curve(std::move(pts), true);
}

Curve make_planar_circle(double radius, std::size_t segments) {
  return make_circle(Vec3::Zero(), Vec3::UnitX(), Vec3::UnitY(), radius, segments);
}

Curve make_hopf_partner(double radius, std::size_t segments) {
  return make_circle(Vec3(0.0, radius, 0.0), Vec3::UnitY(), -Vec3::UnitZ(), radius, segments);
}

Curve make_segment_path(const Vec3& a, const Vec3& b, std::size_t segments) {
  if (segments == 0) {
    throw GeometryError("path needs at least one segment");
  }
  std::vector<Vec3> pts;
  pts.reserve(segments + 1);
  for (std::size_t i = 0; i < segments; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(segments);
    pts.push_back(a + t * (b - a));
  }
  pts.push_back(b);
  return Curve(std::move(pts), false);
}

Curve concatenate(const Curve& first, const Curve& second) {
  if (first.closed() || second.closed()) {
    throw GeometryError("only open curves can be concatenated");
  }
  if (first.points().back() != second.points().front()) {
    throw GeometryError("concatenated curves must share the junction point exactly");
  }
  std::vector<Vec3> pts = first.points();
  pts.insert(pts.end(), second.points().begin() + 1, second.points().end());
  return Curve(std::move(pts), false);
}

Curve repeated(const Curve& closed_curve, std::size_t times) {
  if (!closed_curve.closed() || times == 0) {
    throw GeometryError("repetition needs a closed curve and a positive count");
  }
  std::vector<Vec3> pts;
  pts.reserve(closed_curve.points().size() * times);
  for (std::size_t k = 0; k < times; ++k) {
    pts.insert(pts.end(), closed_curve.points().begin(), closed_curve.points().end());
  }
  return Curve(std::move(pts), true);
}

} // namespace abflux
