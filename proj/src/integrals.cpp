#include "abflux/integrals.hpp"

#include "abflux/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace abflux {

double line_integral_A(const FieldSource& source, const Curve& curve, std::size_t refine,
                       const EvalOptions& opts) {
  if (refine == 0) {
    throw GeometryError("refine must be at least 1");
  }
  const double inv = 1.0 / static_cast<double>(refine);
  double sum = 0.0;
  for (std::size_t i = 0; i < curve.segment_count(); ++i) {
    const auto seg = curve.segment(i);
    const Vec3 step = seg.delta() * inv;
    for (std::size_t k = 0; k < refine; ++k) {
      const Vec3 mid = seg.start + (static_cast<double>(k) + 0.5) * step;
      sum += vector_potential(source, mid, opts).dot(step);
    }
  }
  return sum;
}

QuadratureRule gauss_legendre_unit(std::size_t n) {
  if (n == 0) {
    throw GeometryError("quadrature needs at least one node");
  }
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double dn = static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double dk = static_cast<double>(k);
        const double p2 = ((2.0 * dk - 1.0) * x * p1 - (dk - 1.0) * p0) / dk;
        p0 = p1;
        p1 = p2;
      }
      dp = dn * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // map [-1, 1] -> [0, 1]
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[i] = 0.5 * w;
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

double surface_flux(const FieldSource& source, const Curve& curve, const SurfaceGrid& grid,
                    double planarity_tolerance, const EvalOptions& opts) {
  if (!curve.closed()) {
    throw GeometryError("surface flux needs a closed curve");
  }
  const Vec3 area = curve.vector_area();
  const double area_norm = area.norm();
  if (!(area_norm > 0.0)) {
    throw GeometryError("curve encloses no area");
  }
  const Vec3 normal = area / area_norm;
  const Vec3 center = curve.centroid();
  for (const auto& p : curve.points()) {
    const double off = std::abs((p - center).dot(normal));
    if (off > planarity_tolerance) {
      std::ostringstream os;
      os << "curve is not planar: vertex lies " << off << " m off its plane (tolerance "
         << planarity_tolerance << " m)";
      throw GeometryError(os.str());
    }
  }

  const QuadratureRule radial = gauss_legendre_unit(grid.radial);
  const QuadratureRule along = gauss_legendre_unit(grid.angular);

  // Triangle (c, p, q) parametrized x = c + s ((1 - t) p + t q - c);
  // dA = s (p - c) x (q - p) ds dt.
  double flux = 0.0;
  for (std::size_t i = 0; i < curve.segment_count(); ++i) {
    const auto seg = curve.segment(i);
    const Vec3 jac = (seg.start - center).cross(seg.delta());
    if (jac.dot(normal) < 0.0) {
      throw GeometryError("curve is not star-shaped about its centroid");
    }
    double tri = 0.0;
    for (std::size_t a = 0; a < along.nodes.size(); ++a) {
      const Vec3 edge = seg.start + along.nodes[a] * seg.delta();
      double ray = 0.0;
      for (std::size_t r = 0; r < radial.nodes.size(); ++r) {
        const double s = radial.nodes[r];
        const Vec3 x = center + s * (edge - center);
        ray += radial.weights[r] * s * magnetic_field(source, x, opts).dot(jac);
      }
      tri += along.weights[a] * ray;
    }
    flux += tri;
  }
  return flux;
}

double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1) {
  // Closest points of two segments (Ericson, Real-Time Collision Detection 5.1.9).
  const Vec3 d1 = p1 - p0;
  const Vec3 d2 = q1 - q0;
  const Vec3 r = p0 - q0;
  const double a = d1.squaredNorm();
  const double e = d2.squaredNorm();
  const double f = d2.dot(r);
  const double c = d1.dot(r);
  const double b = d1.dot(d2);
  const double denom = a * e - b * b;
  double s = denom > 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
  double t = (b * s + f) / e;
  if (t < 0.0) {
    t = 0.0;
    s = std::clamp(-c / a, 0.0, 1.0);
  } else if (t > 1.0) {
    t = 1.0;
    s = std::clamp((b - c) / a, 0.0, 1.0);
  }
  return ((p0 + s * d1) - (q0 + t * d2)).norm();
}

LinkingNumber linking_number(const Curve& c1, const Curve& c2, double min_distance) {
  if (!c1.closed() || !c2.closed()) {
    throw GeometryError("linking number needs two closed curves");
  }
  const std::size_t n1 = c1.segment_count();
  const std::size_t n2 = c2.segment_count();
  std::vector<Vec3> mid2(n2), del2(n2);
  for (std::size_t j = 0; j < n2; ++j) {
    const auto s = c2.segment(j);
    mid2[j] = s.midpoint();
    del2[j] = s.delta();
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n1; ++i) {
    const auto s1 = c1.segment(i);
    const Vec3 m1 = s1.midpoint();
    const Vec3 d1 = s1.delta();
    double row = 0.0;
    for (std::size_t j = 0; j < n2; ++j) {
      const auto s2 = c2.segment(j);
      const double dist = segment_distance(s1.start, s1.end, s2.start, s2.end);
      if (dist <= min_distance) {
        std::ostringstream os;
        os << "curves intersect: segments " << i << " and " << j << " are " << dist
           << " m apart";
        throw GeometryError(os.str());
      }
      const Vec3 sep = m1 - mid2[j];
      const double r = sep.norm();
      row += sep.dot(d1.cross(del2[j])) / (r * r * r);
    }
    sum += row;
  }
  const double raw = sum / (4.0 * std::numbers::pi);
  const long integer = std::lround(raw);
  return {integer, raw, std::abs(raw - static_cast<double>(integer))};
}

} // namespace abflux
